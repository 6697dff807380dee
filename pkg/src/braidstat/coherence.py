"""Monoidal expressions with unit and duality, and their canonical normal form.

Surface syntax: ``(x)`` is the tensor operator, ``^`` a postfix dual, ``I``
the unit, and any other identifier an atom.  Parenthesized subexpressions use
plain ``(`` ... ``)``; note that the three characters ``(x)`` always lex as
the tensor operator, so the atom ``x`` needs whitespace inside parentheses
(``( x )``).

The rewrite system

    (a (x) b) (x) c  ->  a (x) (b (x) c)
    I (x) a          ->  a
    a (x) I          ->  a
    (a (x) b)^       ->  b^ (x) a^
    a^^              ->  a
    I^               ->  I

is terminating and confluent; every expression has a unique normal form: the
unit, or a right-nested chain of atoms and dualized atoms.  Two expressions
are equal up to coherence iff their normal forms coincide — coherence never
permutes tensor factors.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .report import CheckReport, FAIL, PASS


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class RewriteLoopError(RuntimeError):
    """The step cap was exceeded; the rewrite system should terminate, so this is a bug."""


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Tensor:
    left: "TensorExpr"
    right: "TensorExpr"


@dataclass(frozen=True)
class Dual:
    inner: "TensorExpr"


TensorExpr = Atom | Unit | Tensor | Dual

UNIT = Unit()

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _lex(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("(x)", i):
            tokens.append(("tensor", "(x)", i))
            i += 3
        elif ch == "(":
            tokens.append(("lparen", ch, i))
            i += 1
        elif ch == ")":
            tokens.append(("rparen", ch, i))
            i += 1
        elif ch == "^":
            tokens.append(("dual", ch, i))
            i += 1
        else:
            m = _IDENT.match(text, i)
            if not m:
                raise ExprSyntaxError(f"unexpected character {ch!r}", i)
            tokens.append(("ident", m.group(), i))
            i = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_expr(text: str) -> TensorExpr:
    """Parse the surface syntax; chained ``(x)`` associates to the left."""
    tokens = _lex(text)
    pos = 0

    def peek() -> tuple[str, str, int]:
        return tokens[pos]

    def advance() -> tuple[str, str, int]:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_chain() -> TensorExpr:
        node = parse_term()
        while peek()[0] == "tensor":
            advance()
            node = Tensor(node, parse_term())
        return node

    def parse_term() -> TensorExpr:
        node = parse_primary()
        while peek()[0] == "dual":
            advance()
            node = Dual(node)
        return node

    def parse_primary() -> TensorExpr:
        kind, value, at = advance()
        if kind == "ident":
            return UNIT if value == "I" else Atom(value)
        if kind == "lparen":
            node = parse_chain()
            kind2, _, at2 = advance()
            if kind2 != "rparen":
                raise ExprSyntaxError("expected ')'", at2)
            return node
        what = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(f"expected an atom, 'I', or '(', found {what}", at)

    node = parse_chain()
    kind, value, at = peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected trailing input {value!r}", at)
    return node


def render_expr(e: TensorExpr) -> str:
    """Print an expression in the surface syntax (round-trips through parse)."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Unit):
        return "I"
    if isinstance(e, Dual):
        inner = render_expr(e.inner)
        if isinstance(e.inner, Tensor):
            inner = f"({inner})"
        return inner + "^"
    left = render_expr(e.left)
    if isinstance(e.left, Tensor):
        left = f"({left})"
    right = render_expr(e.right)
    if isinstance(e.right, Tensor):
        right = f"({right})"
    return f"{left} (x) {right}"


def node_count(e: TensorExpr) -> int:
    if isinstance(e, Tensor):
        return 1 + node_count(e.left) + node_count(e.right)
    if isinstance(e, Dual):
        return 1 + node_count(e.inner)
    return 1


# ---------------------------------------------------------------------------
# Canonical normal form (direct computation)


@dataclass(frozen=True)
class NormalForm:
    """Right-nested, unit-free chain of leaves ``(atom_name, dualled)``.

    The empty chain is the unit.
    """

    factors: tuple[tuple[str, bool], ...]

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def render(self) -> str:
        if self.is_unit:
            return "I"
        return " (x) ".join(name + ("^" if dual else "") for name, dual in self.factors)

    def to_expr(self) -> TensorExpr:
        if self.is_unit:
            return UNIT
        leaves = [Dual(Atom(name)) if dual else Atom(name) for name, dual in self.factors]
        node = leaves[-1]
        for leaf in reversed(leaves[:-1]):
            node = Tensor(leaf, node)
        return node


def normalize(e: TensorExpr) -> NormalForm:
    """Unique normal form of an expression under the rewrite rules."""
    leaves: list[tuple[str, bool]] = []

    def walk(node: TensorExpr, dual: bool) -> None:
        if isinstance(node, Atom):
            leaves.append((node.name, dual))
        elif isinstance(node, Unit):
            pass
        elif isinstance(node, Dual):
            walk(node.inner, not dual)
        else:
            first, second = (node.right, node.left) if dual else (node.left, node.right)
            walk(first, dual)
            walk(second, dual)

    walk(e, False)
    return NormalForm(tuple(leaves))


def expr_to_normal_form(e: TensorExpr) -> NormalForm | None:
    """Read an expression *already in normal shape* as a NormalForm, else None."""
    if isinstance(e, Unit):
        return NormalForm(())
    factors = []
    node = e
    while isinstance(node, Tensor):
        leaf = _as_leaf(node.left)
        if leaf is None:
            return None
        factors.append(leaf)
        node = node.right
    last = _as_leaf(node)
    if last is None:
        return None
    factors.append(last)
    return NormalForm(tuple(factors))


def _as_leaf(node: TensorExpr) -> tuple[str, bool] | None:
    if isinstance(node, Atom):
        return (node.name, False)
    if isinstance(node, Dual) and isinstance(node.inner, Atom):
        return (node.inner.name, True)
    return None


def equal_up_to_coherence(e1: TensorExpr, e2: TensorExpr) -> bool:
    return normalize(e1) == normalize(e2)


# ---------------------------------------------------------------------------
# Step-by-step rewrite engine (used to validate confluence by fuzzing)


def _rule_assoc(e: TensorExpr) -> TensorExpr | None:
    if isinstance(e, Tensor) and isinstance(e.left, Tensor):
        return Tensor(e.left.left, Tensor(e.left.right, e.right))
    return None


def _rule_unit_left(e: TensorExpr) -> TensorExpr | None:
    if isinstance(e, Tensor) and isinstance(e.left, Unit):
        return e.right
    return None


def _rule_unit_right(e: TensorExpr) -> TensorExpr | None:
    if isinstance(e, Tensor) and isinstance(e.right, Unit):
        return e.left
    return None


def _rule_dual_tensor(e: TensorExpr) -> TensorExpr | None:
    if isinstance(e, Dual) and isinstance(e.inner, Tensor):
        return Tensor(Dual(e.inner.right), Dual(e.inner.left))
    return None


def _rule_dual_dual(e: TensorExpr) -> TensorExpr | None:
    if isinstance(e, Dual) and isinstance(e.inner, Dual):
        return e.inner.inner
    return None


def _rule_dual_unit(e: TensorExpr) -> TensorExpr | None:
    if isinstance(e, Dual) and isinstance(e.inner, Unit):
        return UNIT
    return None


RULES: dict[str, Callable[[TensorExpr], TensorExpr | None]] = {
    "assoc": _rule_assoc,
    "unit-left": _rule_unit_left,
    "unit-right": _rule_unit_right,
    "dual-tensor": _rule_dual_tensor,
    "dual-dual": _rule_dual_dual,
    "dual-unit": _rule_dual_unit,
}

DEFAULT_RULES: tuple[str, ...] = tuple(RULES)

Path = tuple[int, ...]


def _subexpressions(e: TensorExpr, path: Path = ()) -> Iterator[tuple[Path, TensorExpr]]:
    yield path, e
    if isinstance(e, Tensor):
        yield from _subexpressions(e.left, path + (0,))
        yield from _subexpressions(e.right, path + (1,))
    elif isinstance(e, Dual):
        yield from _subexpressions(e.inner, path + (0,))


def redexes(e: TensorExpr, rules: Sequence[str] = DEFAULT_RULES) -> list[tuple[Path, str]]:
    """All (position, rule) pairs where a rule applies, in preorder."""
    found = []
    for path, node in _subexpressions(e):
        for name in rules:
            if RULES[name](node) is not None:
                found.append((path, name))
    return found


def _replace(e: TensorExpr, path: Path, new: TensorExpr) -> TensorExpr:
    if not path:
        return new
    head, rest = path[0], path[1:]
    if isinstance(e, Tensor):
        if head == 0:
            return Tensor(_replace(e.left, rest, new), e.right)
        return Tensor(e.left, _replace(e.right, rest, new))
    if isinstance(e, Dual):
        return Dual(_replace(e.inner, rest, new))
    raise ValueError("path descends into a leaf")


def _subexpr_at(e: TensorExpr, path: Path) -> TensorExpr:
    for step in path:
        e = (e.left, e.right)[step] if isinstance(e, Tensor) else e.inner
    return e


def apply_rule(e: TensorExpr, path: Path, rule: str) -> TensorExpr:
    node = _subexpr_at(e, path)
    rewritten = RULES[rule](node)
    if rewritten is None:
        raise ValueError(f"rule {rule} does not apply at {path}")
    return _replace(e, path, rewritten)


def rewrite_normalize(e: TensorExpr,
                      rules: Sequence[str] = DEFAULT_RULES,
                      rng: random.Random | None = None,
                      max_steps: int | None = None) -> TensorExpr:
    """Rewrite to a fixed point, choosing redexes canonically or at random.

    The step cap defaults to ``10 * m^2`` for ``m`` input nodes; exceeding it
    means the rewrite system lost termination and raises.
    """
    if max_steps is None:
        max_steps = 10 * node_count(e) ** 2
    steps = 0
    while True:
        candidates = redexes(e, rules)
        if not candidates:
            return e
        path, rule = candidates[0] if rng is None else rng.choice(candidates)
        e = apply_rule(e, path, rule)
        steps += 1
        if steps > max_steps:
            raise RewriteLoopError(f"exceeded {max_steps} rewrite steps; termination bug")


# ---------------------------------------------------------------------------
# Confluence fuzzing


_ATOM_POOL = ("A", "B", "C", "D", "E", "F")


def random_expr(rng: random.Random, size: int) -> TensorExpr:
    """Random expression with roughly ``size`` nodes."""
    if size <= 1:
        return UNIT if rng.random() < 0.15 else Atom(rng.choice(_ATOM_POOL))
    roll = rng.random()
    if roll < 0.55:
        left_size = rng.randint(1, size - 2) if size > 2 else 1
        return Tensor(random_expr(rng, left_size), random_expr(rng, size - 1 - left_size))
    if roll < 0.85:
        return Dual(random_expr(rng, size - 1))
    return UNIT if roll < 0.9 else Atom(rng.choice(_ATOM_POOL))


def coherence_fuzz(seed: int, size: int, trials: int,
                   rules: Sequence[str] = DEFAULT_RULES) -> CheckReport:
    """Random-order rewriting must reach the canonical normal form.

    For each random expression the engine runs once with random redex choice
    and once canonically (first redex); both results must be structurally
    valid normal forms equal to :func:`normalize`.  With the full rule set
    this is the operational content of coherence; dropping a rule makes the
    check fail on a witness.
    """
    if trials <= 0:
        raise ValueError("trials must be positive")
    if size < 0:
        raise ValueError("size must be >= 0")
    rng = random.Random(seed)
    failures = 0
    witness = None
    for _ in range(trials):
        e = random_expr(rng, rng.randint(1, size) if size > 1 else 1)
        expected = normalize(e)
        shuffled = rewrite_normalize(e, rules, rng=rng)
        canonical = rewrite_normalize(e, rules)
        ok = (expr_to_normal_form(shuffled) == expected
              and expr_to_normal_form(canonical) == expected)
        if not ok:
            failures += 1
            if witness is None:
                witness = {
                    "expr": render_expr(e),
                    "random_order": render_expr(shuffled),
                    "canonical_order": render_expr(canonical),
                    "expected": expected.render(),
                }
    status = PASS if failures == 0 else FAIL
    return CheckReport("coherence-fuzz", status, float(failures), witness,
                       {"seed": seed, "size": size, "trials": trials, "rules": list(rules)})
