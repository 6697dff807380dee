import numpy as np
import pytest

from braidstat import (ModelSpecError, check_cross_symmetric, check_relation_transport,
                       check_transmutation, gram_matrix, load_zoo, make_bicharacter, make_group,
                       make_hom, make_transmutation, transmute_model)


def z2z2_setup():
    model = load_zoo("z2z2_fermion")
    z2 = make_group([2])
    hom = make_hom(model.group, z2, [[1], [1]])
    eps2 = make_bicharacter(z2, [["1/2"]])
    return model, hom, eps2


def test_transmute_model_z2z2_to_z2():
    model, hom, eps2 = z2z2_setup()
    target = transmute_model(model, hom, eps2)
    assert [g.residues for g in target.grades] == [(1,), (1,)]
    assert target.eps == eps2
    assert np.array_equal(target.pairing, model.pairing)
    assert complex(target.braid_phase(1, 2)) == -1


def test_transmute_identity_is_identity():
    model = load_zoo("fermion2")
    hom = make_hom(model.group, model.group, [[1]])
    target = transmute_model(model, hom, model.eps)
    assert target.grades == model.grades
    assert target.eps == model.eps
    assert np.array_equal(target.pairing, model.pairing)


def test_transmute_to_trivial_group_gives_bosonic_exchange():
    model = load_zoo("fermion2")
    trivial = make_group([])
    hom = make_hom(model.group, trivial, [[]])
    from braidstat import Bicharacter
    target = transmute_model(model, hom, Bicharacter.trivial(trivial))
    assert complex(target.braid_phase(1, 2)) == 1
    assert complex(target.braid_phase(1, 1)) == 1


def test_transmute_rejects_matrix_models_and_wrong_groups():
    quon = load_zoo("quon_05")
    trivial = make_group([])
    with pytest.raises(ModelSpecError, match="grade-diagonal"):
        transmute_model(quon, make_hom(trivial, trivial, []),
                        quon.eps)
    model = load_zoo("fermion2")
    wrong_hom = make_hom(make_group([4]), make_group([2]), [[1]])
    with pytest.raises(Exception, match="group|starts"):
        transmute_model(model, wrong_hom, make_bicharacter(make_group([2]), [["1/2"]]))


def test_check_cross_symmetric_passes_for_z2z2():
    model, hom, eps2 = z2z2_setup()
    t = make_transmutation(model, hom, eps2)
    report = check_cross_symmetric(t)
    assert report.passed
    assert report.data == {"cross_compatible": True, "braid_compatible": True}


def test_check_cross_symmetric_fails_for_z2_to_z4():
    model = load_zoo("fermion1")
    z4 = make_group([4])
    hom = make_hom(model.group, z4, [[2]])
    eps4 = make_bicharacter(z4, [["1/4"]])
    t = make_transmutation(model, hom, eps4)
    report = check_cross_symmetric(t)
    assert report.failed
    grades = report.witness["grades"]
    assert [g.residues for g in grades] == [(1,), (1,)]
    # source -1 against target eps'(2,-2) = +1
    assert complex(report.witness["source_phase"]) == -1
    assert complex(report.witness["target_phase"]) == 1


def test_check_cross_symmetric_identity():
    model = load_zoo("z2z2_fermion")
    hom = make_hom(model.group, model.group, [[1, 0], [0, 1]])
    t = make_transmutation(model, hom, model.eps)
    assert check_cross_symmetric(t).passed


def test_relation_transport_z2z2():
    model, hom, eps2 = z2z2_setup()
    t = make_transmutation(model, hom, eps2)
    report = check_relation_transport(t, n_max=3)
    assert report.passed and report.defect <= 1e-12
    assert report.data["image_defect"] <= 1e-12


def test_relation_transport_to_trivial_group():
    from braidstat import Bicharacter
    model = load_zoo("fermion2")
    trivial = make_group([])
    t = make_transmutation(model, make_hom(model.group, trivial, [[]]),
                           Bicharacter.trivial(trivial))
    report = check_relation_transport(t, n_max=3)
    assert report.passed and report.defect <= 1e-12
    # bosonic CCR in the target: the functor-image reading twists with the
    # fermionic cross factor and misses
    assert report.data["image_defect"] > 1


def test_relation_transport_distinguishes_diagram_failure():
    model = load_zoo("fermion1")
    z4 = make_group([4])
    t = make_transmutation(model, make_hom(model.group, z4, [[2]]),
                           make_bicharacter(z4, [["1/4"]]))
    assert check_cross_symmetric(t).failed
    report = check_relation_transport(t, n_max=3)
    # the target model's own relations still close
    assert report.passed and report.defect <= 1e-12
    assert report.data["image_defect"] > 1


def test_transmutation_composition():
    model, hom, eps2 = z2z2_setup()
    z2 = make_group([2])
    z4 = make_group([4])
    hom2 = make_hom(z2, z4, [[2]])
    eps4 = make_bicharacter(z4, [["1/2"]])  # eps4(2,2) = exp(2pi*i*2) = 1... use transported
    middle = transmute_model(model, hom, eps2)
    twice = transmute_model(middle, hom2, eps4)
    once = transmute_model(model, hom2.compose(hom), eps4)
    assert twice.grades == once.grades
    assert twice.eps == once.eps
    assert np.array_equal(twice.pairing, once.pairing)


def test_matching_bicharacters_give_matching_grams():
    model, hom, eps2 = z2z2_setup()
    assert check_transmutation(hom, model.eps, eps2).ok
    target = transmute_model(model, hom, eps2)
    for n in range(5):
        a = gram_matrix(model, n).matrix
        b = gram_matrix(target, n).matrix
        assert np.abs(a - b).max() <= 1e-12


def test_transmutation_preserves_pairing_object():
    model, hom, eps2 = z2z2_setup()
    t = make_transmutation(model, hom, eps2)
    assert t.source.n_generators == t.target.n_generators
    assert np.array_equal(t.source.pairing, t.target.pairing)
