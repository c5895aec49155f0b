"""Oracle checks behind ``cyclohecke verify`` and the acceptance tests.

Each ``check_*`` function takes a suite name (``"small"`` or ``"full"``) and
returns a :class:`CheckResult`.  Failures are collected, never raised, so one
run reports every problem.
"""

from __future__ import annotations

import contextlib
import io
import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .blocks import (
    block_center_dimensions,
    block_idempotents,
    character_matrix,
    enumerate_blocks,
    radical_check,
)
from .combinatorics import (
    Multipartition,
    ResidueMultiset,
    elementary_symmetric_shift_identity,
    basd_rank,
    enumerate_multipartitions,
    enumerate_p_set,
    enumerate_partitions,
    phi,
    residue_tuple,
    sharp,
)
from .graded import ColoredCycle, ColoredProduct, GradedAlgebra, colored_cycle_product, graded_algebra
from .hecke import CyclotomicSpec, hecke_algebra
from .linalg import rank, solve
from .parser import evaluate, parse
from .specht import (
    act,
    affinize,
    central_character,
    dual_specht,
    dualize,
    induce_product,
    relation_failures,
    specht_representation,
    standard_tableaux_count,
)
from .symgroup import Cycle, Permutation, all_cycles

__all__ = ["CheckResult", "CRITERIA", "run_checks", "root_choices", "random_expression"]


@dataclass
class CheckResult:
    number: int
    title: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and self.cases > 0

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


class _Run:
    def __init__(self, result: CheckResult):
        self.result = result

    @contextlib.contextmanager
    def case(self, label: str):
        self.result.cases += 1
        try:
            yield
        except Exception as exc:  # noqa: BLE001 - every failure is reported
            self.result.failures.append(f"{label}: {type(exc).__name__}: {exc}")

    def expect(self, ok: bool, label: str):
        self.result.cases += 1
        if not ok:
            self.result.failures.append(label)


def root_choices(l: int, generic: bool = False) -> list[tuple]:
    """All-zero, all-equal-nonzero, distinct-small and repeated-with-gap roots."""
    out = [(0,) * l, (1,) * l, tuple(range(l)), (0,) * (l - 1) + (2,)]
    if generic:
        out.append(tuple(100 * r for r in range(l)))
    seen = []
    for q in out:
        if q not in seen:
            seen.append(q)
    return seen


def _grid(suite, full, small):
    return full if suite == "full" else small


def _expand(elements, target):
    """Coordinates of ``target`` on linearly independent ``elements`` (or ``None``)."""
    alg = target.algebra
    n = len(elements)
    cols = [e.to_vector() for e in elements]
    m = [[Fraction(0)] * n for _ in range(alg.dimension)]
    for j, v in enumerate(cols):
        for i, x in v.items():
            m[i][j] = x
    b = [Fraction(0)] * alg.dimension
    for i, x in target.to_vector().items():
        b[i] = x
    return solve(m, b)


# --- 1 ------------------------------------------------------------------

def check_center(suite: str) -> CheckResult:
    res = CheckResult(1, "center of H_d^f: dimension |M_d(l)| and spanned by p_d(mu)")
    run = _Run(res)
    grid = _grid(
        suite,
        [(d, 1) for d in range(1, 5)] + [(d, 2) for d in range(1, 5)] + [(d, 3) for d in range(1, 4)],
        [(d, l) for d in (1, 2) for l in (1, 2)] + [(3, 2)],
    )
    for d, l in grid:
        for q in root_choices(l):
            spec = CyclotomicSpec.from_roots(q, d)
            with run.case(f"d={d} roots={q}"):
                hecke_algebra(spec).center_basis_bruteforce(check=True)
    # filtered leading terms: gr p_d(mu) = m_d(mu) + lower terms
    for d, l in _grid(suite, [(d, l) for d in (1, 2, 3) for l in (1, 2, 3)], [(2, 2), (3, 2)]):
        spec = CyclotomicSpec.from_roots(root_choices(l)[-1], d)
        with run.case(f"gr p_d leading terms d={d} l={l}"):
            _gr_leading_check(spec)
    return res


def _gr_leading_check(spec):
    alg = hecke_algebra(spec)
    g = alg.graded
    mus = enumerate_p_set(spec.d, spec.l)
    murphy = [g.murphy_element(mu) for mu in mus]
    weight = {mu: len(mu) + sum(mu.div(spec.l)) for mu in mus}
    for mu in mus:
        r = sum(mu) - sum(mu.div(spec.l))
        gr = alg.gr_component(alg.p_element(mu), r)
        if not g.is_central(gr):
            raise AssertionError(f"gr p_d({mu!r}) is not central")
        coeffs = _expand(murphy, gr)
        if coeffs is None:
            raise AssertionError(f"gr p_d({mu!r}) not in the span of the m_d")
        for nu, c in zip(mus, coeffs):
            if nu == mu and c != 1:
                raise AssertionError(f"gr p_d({mu!r}) has coefficient {c} on m_d({mu!r})")
            if nu != mu and c and weight[nu] >= weight[mu]:
                raise AssertionError(f"gr p_d({mu!r}) involves m_d({nu!r}) of weight {weight[nu]}")


# --- 2 ------------------------------------------------------------------

def check_centralizer(suite: str) -> CheckResult:
    res = CheckResult(2, "centralizer Q_d: rank formula and disjoint colored products")
    run = _Run(res)
    grid = _grid(suite, [(d, l) for d in (1, 2, 3) for l in (1, 2, 3)] + [(4, 2)], [(1, 2), (2, 2), (2, 3), (3, 2)])
    for d, l in grid:
        with run.case(f"d={d} l={l}"):
            g = graded_algebra(d, l)
            basis = g.centralizer_basis()
            if len(basis) != basd_rank(d, l):
                raise AssertionError(f"dim Q_d = {len(basis)}, rank formula {basd_rank(d, l)}")
            span = g.span(basis)
            for prod in g.disjoint_products():
                if not span.contains(g.disjoint_product_element(prod).to_vector()):
                    raise AssertionError(f"{prod!r} is not in the centralizer")
    return res


# --- 3 ------------------------------------------------------------------

def worked_examples() -> list[tuple]:
    """The three worked products of colored cycles as (l, A, B, expected)."""
    def cc(points, r, l):
        return ColoredCycle(Cycle(points), r, l)

    out = [
        (6, cc((1, 2, 3), 4, 6), cc((7, 9, 2), 1, 6), ColoredProduct.make(1, [cc((1, 2, 7, 9, 3), 5, 6)])),
        (6, cc((1, 2, 3), 4, 6), cc((7, 9, 2, 1), 1, 6), ColoredProduct.make(0, [])),
    ]
    for l in (2, 3, 6):
        out.append(
            (
                l,
                cc((1, 2, 3), 0, l),
                cc((7, 9, 2, 1), 0, l),
                ColoredProduct.make(l, [cc((1, 7, 9, 3), l - 1, l), cc((2,), l - 1, l)]),
            )
        )
    return out


def check_cycle_products(suite: str) -> CheckResult:
    res = CheckResult(3, "closed forms for products of colored cycles")
    run = _Run(res)
    for d, l in _grid(suite, [(d, l) for d in (1, 2, 3, 4) for l in (1, 2, 3)], [(3, 2), (3, 3)]):
        with run.case(f"all pairs d={d} l={l}"):
            g = graded_algebra(d, l)
            cycles = all_cycles(d)
            elems = {}
            for c in cycles:
                for r in range(l):
                    cc = ColoredCycle(c, r, l)
                    elems[cc] = g.colored_cycle_element(cc)
            for a, b in itertools.product(elems, repeat=2):
                closed = g.product_element(colored_cycle_product(a, b))
                if closed != elems[a] * elems[b]:
                    raise AssertionError(f"{a!r}{b!r} closed form disagrees")
    for l, a, b, expected in worked_examples():
        with run.case(f"worked example {a!r}{b!r} l={l}"):
            got = colored_cycle_product(a, b)
            if got != expected:
                raise AssertionError(f"got {got!r}, expected {expected!r}")
            g = GradedAlgebra(9, l)
            if g.product_element(got) != g.colored_cycle_element(a) * g.colored_cycle_element(b):
                raise AssertionError("closed form disagrees with multiplication")
    return res


# --- 4 ------------------------------------------------------------------

def check_graded_center(suite: str) -> CheckResult:
    res = CheckResult(4, "class sums and Murphy-type bases of the graded center, unitriangular")
    run = _Run(res)
    for d, l in _grid(suite, [(d, l) for d in (1, 2, 3) for l in (1, 2, 3)], [(2, 2), (3, 2)]):
        with run.case(f"d={d} l={l}"):
            _graded_center_check(graded_algebra(d, l))
    return res


def _graded_center_check(g):
    center = g.center_basis_bruteforce()
    expected = len(enumerate_multipartitions(g.d, g.l))
    if len(center) != expected:
        raise AssertionError(f"graded center has dimension {len(center)}, expected {expected}")
    mps = enumerate_multipartitions(g.d, g.l)
    zs = [g.class_sum(mp) for mp in mps]
    for mp, z in zip(mps, zs):
        g.assert_central(z, f"z_d{mp!r}")
    if len(g.span(zs)) != len(zs) or not g.same_span(zs, center):
        raise AssertionError("class sums are not a basis of the center")
    ms = {mu: g.murphy_element(mu) for mu in enumerate_p_set(g.d, g.l)}
    if len(g.span(ms.values())) != len(ms) or not g.same_span(list(ms.values()), center):
        raise AssertionError("Murphy-type elements are not a basis of the center")
    order = sorted(range(len(mps)), key=lambda k: (sharp(mps[k]), k))
    rank_of = {mps[k]: pos for pos, k in enumerate(order)}
    for mp in mps:
        coeffs = g.z_expansion(ms[phi(mp)])
        if coeffs.get(mp) != 1:
            raise AssertionError(f"m_d(phi{mp!r}) has coefficient {coeffs.get(mp)} on z_d{mp!r}")
        for other, c in coeffs.items():
            if other != mp and c and (sharp(other) >= sharp(mp) or rank_of[other] > rank_of[mp]):
                raise AssertionError(f"m_d(phi{mp!r}) involves z_d{other!r} out of order")


# --- 5 ------------------------------------------------------------------

def check_murphy(suite: str) -> CheckResult:
    res = CheckResult(5, "level one: group algebra center via Jucys-Murphy elements")
    run = _Run(res)
    for d in _grid(suite, [1, 2, 3, 4, 5], [1, 2, 3]):
        with run.case(f"d={d}"):
            spec = CyclotomicSpec.from_roots((0,), d)
            alg = hecke_algebra(spec)
            for i in range(1, d + 1):
                jm = alg.zero()
                for j in range(1, i):
                    jm = jm + alg.perm(Permutation.transposition(d, j, i))
                if alg.x(i) != jm:
                    raise AssertionError(f"x{i} is not the Jucys-Murphy element")
            center = alg.center_basis_bruteforce(check=False)
            if len(center) != len(enumerate_partitions(d)):
                raise AssertionError(f"center dimension {len(center)} != p({d})")
            sym = list(alg.p_basis().values())
            if not alg.same_span(center, sym):
                raise AssertionError("symmetric polynomials in JM elements miss the center")
            g = graded_algebra(d, 1)
            classes = [alg.from_vector(g.class_sum(mp).to_vector()) for mp in enumerate_multipartitions(d, 1)]
            if not alg.same_span(center, classes):
                raise AssertionError("conjugacy class sums do not span the center")
    return res


# --- 6, 7 -----------------------------------------------------------------

def _block_specs(suite):
    grid = _grid(suite, [(d, l) for d in (1, 2, 3) for l in (1, 2)], [(1, 2), (2, 1), (2, 2), (3, 1)])
    for d, l in grid:
        for q in root_choices(l, generic=True):
            yield CyclotomicSpec.from_roots(q, d)


def _separated(roots, d) -> bool:
    return all(abs(a - b) > d for a, b in itertools.combinations(roots, 2))


def check_block_dimensions(suite: str) -> CheckResult:
    res = CheckResult(6, "block centers: dimension equals fiber size")
    run = _Run(res)
    for spec in _block_specs(suite):
        with run.case(str(spec)):
            blocks = block_idempotents(spec)
            dims = block_center_dimensions(spec, blocks)
            if sum(dims.values()) != len(enumerate_multipartitions(spec.d, spec.l)):
                raise AssertionError("block dimensions do not add up to |M_d(l)|")
            if _separated(spec.roots, spec.d) and any(v != 1 for v in dims.values()):
                raise AssertionError(f"generic roots gave non-singleton blocks {dims}")
            for b in blocks:
                for mp in b.fiber:
                    rep = dual_specht(mp, spec.roots)
                    for other in blocks:
                        m = act(rep, other.idempotent)
                        want = 1 if other is b else 0
                        if any(m[i][j] != (want if i == j else 0) for i in range(rep.dim) for j in range(rep.dim)):
                            raise AssertionError(f"b{other.residues} acts wrongly on S{mp!r}")
    spec = CyclotomicSpec.from_roots((0, 0), 2)
    with run.case("roots (0,0), d=2 dims {2,2,1}"):
        dims = block_center_dimensions(spec, block_idempotents(spec))
        if sorted(dims.values()) != [1, 2, 2]:
            raise AssertionError(f"dims {sorted(dims.values())}")
    return res


def check_central_characters(suite: str) -> CheckResult:
    res = CheckResult(7, "every central character is a residue character")
    run = _Run(res)
    for spec in _block_specs(suite):
        with run.case(str(spec)):
            blocks = enumerate_blocks(spec)
            chars = character_matrix(blocks, spec.d, spec.l)
            if rank(chars) != len(blocks):
                raise AssertionError("character matrix is not of full row rank")
            blocks = block_idempotents(spec)
            dims = block_center_dimensions(spec, blocks)
            if sum(dims.values()) != len(hecke_algebra(spec).center_basis_bruteforce(check=False)):
                raise AssertionError("block dimensions do not add up to dim Z")
            radical_check(spec, blocks)
    return res


# --- 8 ------------------------------------------------------------------

DIAGRAM_RESIDUES = ((4, 2, 1), 5, ResidueMultiset([5, 6, 7, 8, 4, 5, 3]))


def check_specht(suite: str) -> CheckResult:
    res = CheckResult(8, "dual Specht modules: relations, f(x_1) = 0, central characters")
    run = _Run(res)
    for d in _grid(suite, [1, 2, 3, 4, 5], [1, 2, 3]):
        for lam in enumerate_partitions(d):
            with run.case(f"Specht {lam!r}"):
                rep = specht_representation(lam)
                if rep.dim != standard_tableaux_count(lam):
                    raise AssertionError(f"dimension {rep.dim} != {standard_tableaux_count(lam)}")
                fails = relation_failures(rep)
                if fails:
                    raise AssertionError(", ".join(fails))
    for d, l in [(d, l) for d in (1, 2, 3) for l in (1, 2)]:
        for q in root_choices(l, generic=True):
            for mp in enumerate_multipartitions(d, l):
                with run.case(f"S{mp!r} q={q}"):
                    rep = dual_specht(mp, q)
                    fails = relation_failures(rep, q)
                    if fails:
                        raise AssertionError(", ".join(fails))
                    got = central_character(rep)
                    if got != residue_tuple(mp, q):
                        raise AssertionError(f"central character {got!r} != {residue_tuple(mp, q)!r}")
    shape, q, expected = DIAGRAM_RESIDUES
    with run.case(f"residues of {shape} at q={q}"):
        rep = affinize(dualize(specht_representation(shape)), q)
        got = central_character(rep, (q,))
        if got != expected or residue_tuple(Multipartition([shape]), (q,)) != expected:
            raise AssertionError(f"got {got!r}")
    with run.case("concatenation of central characters"):
        for a, b in [((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,))]:
            m1 = affinize(dualize(specht_representation(a)), 0)
            m2 = affinize(dualize(specht_representation(b)), 3)
            prod = induce_product(m1, m2)
            if relation_failures(prod):
                raise AssertionError("induced module breaks relations")
            union = ResidueMultiset(list(central_character(m1, (0,))) + list(central_character(m2, (3,))))
            if central_character(prod, (0, 3)) != union:
                raise AssertionError(f"{a}∘{b}: central character is not the union")
    return res


# --- 9 ------------------------------------------------------------------

def check_generation(suite: str) -> CheckResult:
    res = CheckResult(9, "generators of the centers: cycle class sums and power sums")
    run = _Run(res)
    for d, l in _grid(suite, [(d, l) for d in (1, 2, 3) for l in (1, 2)], [(2, 2), (3, 1)]):
        with run.case(f"graded d={d} l={l}"):
            g = graded_algebra(d, l)
            gens = [g.class_sum_cycles(a, r) for a in range(1, d + 1) for r in range(l)]
            sub = g.generated_subalgebra(gens)
            center = g.center_basis_bruteforce()
            if len(sub) != len(center) or not all(sub.contains(z.to_vector()) for z in center):
                raise AssertionError("class sums of single colored cycles do not generate the center")
        for q in root_choices(l):
            with run.case(f"power sums d={d} roots={q}"):
                if not hecke_algebra(CyclotomicSpec.from_roots(q, d)).power_sum_generation_check():
                    raise AssertionError("power sums do not generate the center")
    return res


# --- 10 -----------------------------------------------------------------

def _support_check(expansion, i, bound, l, label):
    for key, c in expansion.items():
        support = frozenset().union(*(f.support for f in key)) if key else frozenset()
        if l == 1:
            support |= {i}
        if any(f.color != l - 1 for f in key):
            raise AssertionError(f"{label}: term {key!r} has a color other than l-1")
        if i not in support or not support <= set(range(1, i + 1)) or len(support) > bound:
            raise AssertionError(f"{label}: term {key!r} violates the support condition")
        first = [f for f in key if i in f.support]
        if not first and l != 1:
            raise AssertionError(f"{label}: no cycle of {key!r} involves {i}")


def check_term_structure(suite: str) -> CheckResult:
    res = CheckResult(10, "term-level structure: h_r products, y_i(l)^p, gr x_i^k, e_r shift identity")
    run = _Run(res)
    levels = _grid(suite, (1, 2, 3), (1, 2))
    for l in levels:
        with run.case(f"h_r(I) h_s(J) l={l}"):
            g = GradedAlgebra(4, l)
            subsets = [s for k in range(1, 5) for s in itertools.combinations(range(1, 5), k)]
            for I, J in itertools.product(subsets, repeat=2):
                c = len(set(I) & set(J))
                if not c:
                    continue
                for r, s in itertools.product(range(l), repeat=2):
                    lhs = g.h_poly(r, I) * g.h_poly(s, J)
                    rhs = g.h_poly(r + s + (c - 1) * (l - 1), set(I) | set(J)) * Fraction(l) ** (c - 1)
                    if lhs != rhs:
                        raise AssertionError(f"I={I} J={J} r={r} s={s}")
    for l in levels:
        g = GradedAlgebra(3, l)
        for i, p in itertools.product((1, 2, 3), (0, 1, 2, 3)):
            with run.case(f"y_{i}(l)^{p} l={l}"):
                diff = g.y_element(i, l) ** p - g.y_element(i, p * l)
                if p == 0:
                    if diff:
                        raise AssertionError("p = 0 difference is nonzero")
                    continue
                _support_check(g.colored_expansion(diff), i, p, l, f"y_{i}({l})^{p}")
    for l in levels:
        for q in root_choices(l)[:2] + root_choices(l)[-1:]:
            spec = CyclotomicSpec.from_roots(q, 3)
            alg = hecke_algebra(spec)
            g = alg.graded
            for i, a, r in itertools.product((1, 2, 3), (1, 2, 3), range(l)):
                k = (a - 1) * l + r
                with run.case(f"gr x_{i}^{k} roots={q}"):
                    alpha = [0] * 3
                    alpha[i - 1] = k
                    gr = alg.gr_component(alg.xmonomial(alpha), (a - 1) * (l - 1) + r)
                    diff = gr - g.y_element(i, k)
                    if r > 0 and diff:
                        raise AssertionError(f"gr differs from y_{i}({k})")
                    if r == 0:
                        _support_check(g.colored_expansion(diff), i, a - 1, l, f"gr x_{i}^{k}")
    with run.case("e_r shift identity"):
        rng = random.Random(20240601)
        for _ in range(200):
            k = rng.randint(0, 4)
            vals = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k)]
            u = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            r = rng.randint(0, 5)
            if not elementary_symmetric_shift_identity(vals, u, r):
                raise AssertionError(f"fails at {vals}, {u}, {r}")
    return res


# --- 11 -----------------------------------------------------------------

def random_expression(rng: random.Random, d: int, depth: int = 3) -> str:
    """Random well-formed expression in ``x_1..x_d`` and ``s_1..s_{d-1}``."""
    def atom():
        roll = rng.random()
        if roll < 0.2:
            num, den = rng.randint(0, 5), rng.randint(1, 3)
            return str(num) if den == 1 else f"{num}/{den}"
        if roll < 0.6 or d == 1:
            return f"x{rng.randint(1, d)}"
        return f"s{rng.randint(1, d - 1)}"

    def expr(level):
        if level == 0:
            return atom()
        kind = rng.random()
        if kind < 0.35:
            return f"{expr(level - 1)} + {expr(level - 1)}"
        if kind < 0.5:
            return f"{expr(level - 1)} - {expr(level - 1)}"
        if kind < 0.8:
            sep = rng.choice(["*", ""])
            return f"({expr(level - 1)}){sep}({expr(level - 1)})"
        if kind < 0.9:
            return f"({expr(level - 1)})^{rng.randint(0, 3)}"
        return atom()

    return expr(depth)


def run_cli(argv) -> tuple[int, str]:
    from .cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def check_cli(suite: str) -> CheckResult:
    res = CheckResult(11, "command line examples and parse/print round trip")
    run = _Run(res)
    with run.case("nf example"):
        code, out = run_cli(["nf", "--d", "2", "--roots", "0,0", "s1*x2"])
        if code != 0 or out != "x1*s1 + 1\n":
            raise AssertionError(f"exit {code}, output {out!r}")
    with run.case("center example"):
        argv = ["center", "--d", "2", "--l", "2", "--roots", "0,0", "--format", "json"]
        code, out = run_cli(argv)
        code2, out2 = run_cli(argv)
        data = json.loads(out)
        if code or out != out2 or len(data["basis"]) != 5:
            raise AssertionError(f"exit {code}, {len(data.get('basis', []))} basis elements")
        if out != json.dumps(data, sort_keys=True, indent=2) + "\n":
            raise AssertionError("JSON output is not canonical")
    with run.case("blocks example"):
        code, out = run_cli(["blocks", "--d", "2", "--roots", "0,0"])
        dims = sorted(int(line.split("dim ")[1].split()[0]) for line in out.splitlines() if "dim " in line)
        if code or dims != [1, 2, 2]:
            raise AssertionError(f"exit {code}, dims {dims}")
    rng = random.Random(7)
    specs = [CyclotomicSpec.from_roots(q, d) for d, q in [(2, (0, 0)), (3, (0, 1)), (3, (1,)), (2, (0, 1, 2))]]
    with run.case("round trip"):
        for n in range(_grid(suite, 200, 40)):
            spec = specs[n % len(specs)]
            alg = hecke_algebra(spec)
            text = random_expression(rng, spec.d)
            first = evaluate(parse(text), alg)
            printed = first.to_text()
            again = evaluate(parse(printed), alg)
            if again != first or again.to_text() != printed:
                raise AssertionError(f"{text!r} -> {printed!r} is not a fixed point")
    return res


CRITERIA = [
    check_center,
    check_centralizer,
    check_cycle_products,
    check_graded_center,
    check_murphy,
    check_block_dimensions,
    check_central_characters,
    check_specht,
    check_generation,
    check_term_structure,
    check_cli,
]


def run_checks(suite: str = "small", only=None) -> list[CheckResult]:
    out = []
    for k, fn in enumerate(CRITERIA, start=1):
        if only and k not in only:
            continue
        t = time.perf_counter()
        res = fn(suite)
        res.seconds = time.perf_counter() - t
        out.append(res)
    return out
