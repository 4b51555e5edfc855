"""Seeded verification suites shared by the CLI and the acceptance tests.

Each suite returns a list of :class:`Case` records in a fixed order. A
suite's random draws come from one :class:`RationalSampler` seeded with
the suite seed, so a seed determines the whole report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .detform import (S_A, S_D, Z_hom_Q, Z_theorem1, appendix_b_sides)
from .exact import format_rational
from .exact.bivariate import BivariatePolynomial
from .hankel import (Z_hankel_ad, Z_hankel_explicit, Z_hypergeom, derivative_formula_sides,
                     lemma_dets_sides)
from .lattice import (LatticeSpec, WeightParams, count_configs, enumerate_plane_partitions,
                      macmahon_count, partition_function_oracle)
from .painleve import is_degenerate, nu_parameters, sigma_form_residual, sigma_from_Z
from .qism import (VacuumEigenvalues, bosonic_site, build_four_vertex_L,
                   build_L5v_second, failing_relations, five_vertex_site,
                   free_eigenvalue_bracket, matrix_element_Z, monodromy_from_sites,
                   spm_site, verify_action_lemma, verify_commutation_16, verify_RLL,
                   verify_symmetry_proposition)
from .qism.lops import Site
from .sampling import RationalSampler


@dataclass
class Case:
    id: str
    inputs: dict
    expected: str
    actual: str
    passed: bool
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"id": self.id, "inputs": self.inputs, "expected": self.expected,
               "actual": self.actual, "pass": self.passed}
        if self.notes:
            out["notes"] = self.notes
        return out


def _fmt(v) -> str:
    return format_rational(v)


def _fmt_list(vs) -> list[str]:
    return [_fmt(v) for v in vs]


def box_grid(max_size: int, min_n: int = 0):
    """(L, M, N) with 1 <= L, M <= max_size and min_n <= N <= min(L, M)."""
    for L in range(1, max_size + 1):
        for M in range(1, max_size + 1):
            for N in range(min_n, min(L, M) + 1):
                yield LatticeSpec(L, M, N)


def _spec_inputs(spec: LatticeSpec) -> dict:
    return {"L": spec.L, "M": spec.M, "N": spec.N}


# -- L x L determinant vs lattice sum vs vacuum element --------------------


def suite_theorem1(seed: int = 0, max_size: int = 5, draws: int = 25) -> list[Case]:
    """Determinant formula = lattice sum = QISM vacuum element, inhomogeneous."""
    rs = RationalSampler(seed)
    cases = []
    for spec in box_grid(max_size):
        for k in range(draws):
            p = WeightParams(rs.rational(), rs.rational(),
                             rs.rationals(spec.L, distinct_squares=True),
                             rs.rationals(spec.M, distinct_squares=True))
            oracle = partition_function_oracle(spec, p)
            qism = matrix_element_Z(spec, p)
            det = Z_theorem1(spec, p)
            cases.append(Case(
                f"theorem1/L{spec.L}M{spec.M}N{spec.N}/{k}",
                {**_spec_inputs(spec), "alpha": _fmt(p.alpha), "delta": _fmt(p.delta),
                 "u": _fmt_list(p.u), "xi": _fmt_list(p.xi)},
                _fmt(oracle), _fmt(det), oracle == qism == det,
                {"qism": _fmt(qism)}))
    return cases


# -- homogeneous chain -----------------------------------------------------


def theorem2_values(spec: LatticeSpec, u, alpha, Delta) -> dict[str, Fraction]:
    """Every homogeneous method at the point u (x = u^2)."""
    x = u * u
    out = {"q-limit": Z_hom_Q(spec, u, alpha, Delta)}
    for side in ("LN", "N"):
        out[f"hankel-ad/{side}"] = Z_hankel_ad(spec, u, alpha, Delta, side)
        out[f"hankel-explicit/{side}"] = Z_hankel_explicit(spec, x, alpha, Delta, side).evaluate(u)
        out[f"hypergeom/{side}"] = Z_hypergeom(spec, x, alpha, Delta, side).evaluate(u)
        out[f"derivative/{side}"] = Z_hypergeom(spec, x, alpha, Delta, side,
                                                form="derivative").evaluate(u)
    return out


def suite_theorem2_chain(seed: int = 0, max_size: int = 5, draws: int = 10) -> list[Case]:
    """Homogeneous lattice sum against every Hankel form, both sides."""
    rs = RationalSampler(seed)
    cases = []
    for spec in box_grid(max_size):
        for k in range(draws):
            u = rs.rational(exclude=(1, -1))
            alpha, Delta = rs.rational(), rs.rational()
            oracle = partition_function_oracle(
                spec, WeightParams.homogeneous_point(spec, u, alpha, Delta))
            vals = theorem2_values(spec, u, alpha, Delta)
            bad = sorted(k2 for k2, v in vals.items() if v != oracle)
            cases.append(Case(
                f"theorem2-chain/L{spec.L}M{spec.M}N{spec.N}/{k}",
                {**_spec_inputs(spec), "x": _fmt(u * u), "u": _fmt(u),
                 "alpha": _fmt(alpha), "delta": _fmt(Delta)},
                _fmt(oracle), _fmt(vals["hypergeom/LN"]), not bad,
                {"mismatched": bad} if bad else {}))
    return cases


# -- vacuum elements with free eigenvalues ---------------------------------


def suite_free_eigenvalues(seed: int = 0, max_nm: int = 4, M: int = 5) -> list[Case]:
    """S_A, S_D with arbitrary a(u_j), d(u_j) against brackets of explicit chains."""
    rs = RationalSampler(seed)
    cases = []
    for n in range(0, max_nm + 1):
        for m in range(0, max_nm - n + 1):
            if n + m == 0:
                continue
            L = 2 * n + m
            for which in ("A", "D"):
                u = rs.rationals(L, distinct_squares=True)
                a_vals, d_vals = rs.rationals(L), rs.rationals(L)
                eig = VacuumEigenvalues.from_table(
                    {uj: (a, d) for uj, a, d in zip(u, a_vals, d_vals)})
                Delta = rs.rational()
                formula = (S_A if which == "A" else S_D)(n, m, u, eig, Delta)
                res = free_eigenvalue_bracket(n, m, u, a_vals, d_vals, which, Delta, M=M,
                                              seed=rs.integer(0, 2 ** 31))
                cases.append(Case(
                    f"free-eigenvalues/n{n}m{m}/{which}",
                    {"n": n, "m": m, "which": which, "u": _fmt_list(u),
                     "a": _fmt_list(a_vals), "d": _fmt_list(d_vals), "delta": _fmt(Delta)},
                    _fmt(res.value), _fmt(formula), res.rank_ok and res.value == formula,
                    {"chains": res.chains, "span_ok": res.rank_ok}))
    return cases


# -- Painleve --------------------------------------------------------------


def painleve_case(spec: LatticeSpec, alpha=1, Delta=1) -> Case:
    res = sigma_form_residual(sigma_from_Z(spec, alpha, Delta), nu_parameters(spec))
    zero = res.is_zero()
    return Case(f"painleve/L{spec.L}M{spec.M}N{spec.N}",
                {**_spec_inputs(spec), "alpha": _fmt(alpha), "delta": _fmt(Delta)},
                "0/1", "0/1" if zero else str(res), zero,
                {"degenerate": is_degenerate(spec)})


def suite_painleve(seed: int = 0, max_size: int = 5, spec: LatticeSpec | None = None
                   ) -> list[Case]:
    """sigma-form residual for one box or every box up to max_size."""
    specs = [spec] if spec is not None else list(box_grid(max_size))
    return [painleve_case(s) for s in specs]


# -- RLL and the sixteen relations ------------------------------------------


SOLUTIONS = ("five-vertex", "five-vertex-2", "four-vertex", "spm", "bosonic")
BOSON_F = 6


def _boson_params(rs: RationalSampler):
    """(alpha, delta) with alpha*delta = -s^2 for a rational s != 1."""
    s = rs.rational(positive=True, exclude=(1,))
    alpha = rs.rational()
    return alpha, -s * s / alpha


def _solution_sites(solution: str, rs: RationalSampler, Delta, count: int) -> list[tuple]:
    """(label, site, safe_dim) triples for one solution family."""
    out = []
    if solution == "five-vertex":
        for _ in range(count):
            xi, alpha = rs.rational(), rs.rational()
            out.append((f"xi={_fmt(xi)},alpha={_fmt(alpha)}",
                        five_vertex_site(xi, alpha, Delta), None))
    elif solution == "five-vertex-2":
        for _ in range(count):
            alpha = rs.rational()
            out.append((f"alpha={_fmt(alpha)}",
                        Site(2, lambda u, a=alpha: build_L5v_second(u, a, Delta)), None))
    elif solution == "four-vertex":
        for _ in range(count):
            out.append(("", Site(2, lambda u: build_four_vertex_L(u, Delta)), None))
    elif solution == "spm":
        for variant in ("first", "second", "third"):
            for m in (1, 2, 3):
                for zero_slot in ("both", "beta1", "beta2"):
                    b = rs.rational(exclude=(-1,))
                    beta1 = Fraction(0) if zero_slot in ("both", "beta1") else b
                    beta2 = Fraction(0) if zero_slot in ("both", "beta2") else b
                    alpha, gamma = rs.rational(), rs.rational(exclude=(-1,))
                    out.append((f"{variant},m={m},beta1={_fmt(beta1)},beta2={_fmt(beta2)}",
                                spm_site(variant, m, alpha, beta1, beta2, gamma, Delta), None))
    elif solution == "bosonic":
        for _ in range(count):
            alpha, dp = _boson_params(rs)
            sign = rs.choice((1, -1))
            out.append((f"alpha={_fmt(alpha)},delta={_fmt(dp)},sign={sign}",
                        bosonic_site(alpha, dp, Delta, BOSON_F, sign), BOSON_F - 3))
    else:
        raise ValueError(f"unknown solution {solution!r}; choose from {SOLUTIONS}")
    return out


def suite_rll(seed: int = 0, solution: str = "all", points: int = 5) -> list[Case]:
    """RLL residual at ``points`` seeded (u, v, Delta) per solution instance."""
    rs = RationalSampler(seed)
    names = SOLUTIONS if solution == "all" else (solution,)
    cases = []
    for name in names:
        for p in range(points):
            Delta = rs.rational()
            u, v = rs.rationals(2, distinct_squares=True)
            for label, site, safe in _solution_sites(name, rs, Delta, 1):
                res = verify_RLL(site, u=u, v=v, Delta=Delta, safe_dim=safe)
                cases.append(Case(
                    f"rll/{name}/{p}/{label}" if label else f"rll/{name}/{p}",
                    {"solution": name, "instance": label, "u": _fmt(u), "v": _fmt(v),
                     "delta": _fmt(Delta)},
                    "zero", "zero" if res.is_zero() else f"{res.nnz()} nonzero entries",
                    res.is_zero()))
    return cases


def suite_commutation16(seed: int = 0, solution: str = "all", points: int = 5,
                        chain: int = 2) -> list[Case]:
    """The sixteen relations for monodromies of ``chain`` sites (bosons: one site)."""
    rs = RationalSampler(seed)
    names = SOLUTIONS if solution == "all" else (solution,)
    cases = []
    for name in names:
        for p in range(points):
            Delta = rs.rational()
            u, v = rs.rationals(2, distinct_squares=True)
            if name == "spm":
                pool = _solution_sites(name, rs, Delta, 0)
                chosen = [pool[rs.integer(0, len(pool) - 1)] for _ in range(chain)]
            else:
                chosen = _solution_sites(name, rs, Delta, 1 if name == "bosonic" else chain)
            sites = [c[1] for c in chosen]
            safe = chosen[0][2]
            Tu = monodromy_from_sites(u, sites)
            Tv = monodromy_from_sites(v, sites)
            bad = failing_relations(verify_commutation_16(Tu, Tv, u, v, Delta, safe))
            cases.append(Case(
                f"commutation16/{name}/{p}",
                {"solution": name, "sites": [c[0] for c in chosen], "u": _fmt(u),
                 "v": _fmt(v), "delta": _fmt(Delta), "safe_dim": safe},
                "16 relations", "16 relations" if not bad else "failing: " + ",".join(bad),
                not bad))
    return cases


# -- algebraic Bethe ansatz lemmas -----------------------------------------


def suite_action_lemma(seed: int = 0, max_n: int = 3, max_M: int = 4) -> list[Case]:
    rs = RationalSampler(seed)
    cases = []
    for M in range(1, max_M + 1):
        for n in range(0, max_n + 1):
            for which in ("A", "D"):
                p = WeightParams(rs.rational(), rs.rational(), (Fraction(1),), rs.rationals(M))
                u = rs.rationals(n + 1, distinct_squares=True)
                res = verify_action_lemma(n, u, which, M, p)
                zero = all(v == 0 for v in res.values())
                cases.append(Case(
                    f"action-lemma/M{M}/n{n}/{which}",
                    {"M": M, "n": n, "which": which, "u": _fmt_list(u), "xi": _fmt_list(p.xi),
                     "alpha": _fmt(p.alpha), "delta": _fmt(p.delta)},
                    "zero vector", "zero vector" if zero else f"{len(res)} nonzero components",
                    zero))
    return cases


def suite_symmetry(seed: int = 0, max_total: int = 4, M: int = 3) -> list[Case]:
    rs = RationalSampler(seed)
    cases = []
    for l in range(0, max_total + 1):
        for m in range(0, max_total - l + 1):
            for n in range(0, max_total - l - m + 1):
                if l + m + n < 2:
                    continue
                for which in ("A", "D"):
                    alpha, Delta = rs.rational(), rs.rational()
                    sites = [five_vertex_site(x, alpha, Delta) for x in rs.rationals(M)]
                    cache: dict = {}

                    def make(x, sites=sites, cache=cache):
                        if x not in cache:
                            cache[x] = monodromy_from_sites(x, sites)
                        return cache[x]

                    allu = rs.rationals(l + m + n, distinct_squares=True)
                    res = verify_symmetry_proposition(make, allu[:l], allu[l:l + m],
                                                      allu[l + m:], which)
                    bad = [str(k) for k, ok in res.items() if not ok]
                    cases.append(Case(
                        f"symmetry/l{l}m{m}n{n}/{which}",
                        {"l": l, "m": m, "n": n, "which": which, "rapidities": _fmt_list(allu)},
                        "invariant", "invariant" if not bad else "broken by " + ";".join(bad),
                        not bad, {"transpositions": len(res)}))
    return cases


def suite_appendix_b(seed: int = 0, max_n: int = 3, draws: int = 10) -> list[Case]:
    rs = RationalSampler(seed)
    cases = []
    for n in range(1, max_n + 1):
        for k in range(draws):
            u = rs.rationals(2 * n, distinct_squares=True)
            a_t, d_t = rs.rationals(2 * n), rs.rationals(2 * n)
            lhs, rhs = appendix_b_sides(n, a_t, d_t, u)
            cases.append(Case(f"appendix-b/n{n}/{k}",
                              {"n": n, "u": _fmt_list(u), "a": _fmt_list(a_t), "d": _fmt_list(d_t)},
                              _fmt(lhs), _fmt(rhs), lhs == rhs))
    return cases


# -- Hankel lemmas ---------------------------------------------------------


def random_homogeneous(rs: RationalSampler) -> tuple[BivariatePolynomial, int]:
    """A Laurent polynomial with 1 to 3 monomials, all of one total degree."""
    nu = rs.integer(-2, 5)
    terms: dict = {}
    for _ in range(rs.integer(1, 3)):
        i = rs.integer(-2, 6)
        terms[(i, nu - i)] = terms.get((i, nu - i), 0) + rs.rational()
    h = BivariatePolynomial(terms)
    if h.is_zero():
        h = BivariatePolynomial.monomial(nu, 0)
    return h, nu


def suite_lemma_dets(seed: int = 0, draws: int = 10, max_n: int = 3) -> list[Case]:
    rs = RationalSampler(seed)
    cases = []
    for k in range(draws):
        h, nu = random_homogeneous(rs)
        n = rs.integer(1, max_n)
        left, right = lemma_dets_sides(h, n)
        cases.append(Case(f"lemma-dets/{k}", {"h": repr(h), "nu": nu, "n": n},
                          str(left), str(right), left == right))
    return cases


def suite_derivative_formula(seed: int = 0, draws: int = 10, max_n: int = 4) -> list[Case]:
    rs = RationalSampler(seed)
    cases = []
    for k in range(draws):
        n = rs.integer(0, max_n)
        a = rs.rational()
        b = rs.rational_where(lambda q: not (q.denominator == 1 and -n + 1 <= q <= 0))
        x = rs.rational(exclude=(1,))
        lhs, rhs = derivative_formula_sides(n, a, b)
        cases.append(Case(f"derivative-formula/{k}",
                          {"n": n, "a": _fmt(a), "b": _fmt(b), "x": _fmt(x)},
                          _fmt(lhs(x)), _fmt(rhs(x)), lhs == rhs and lhs(x) == rhs(x)))
    return cases


# -- counting --------------------------------------------------------------


def count_report(spec: LatticeSpec) -> dict[str, int]:
    """Configuration count, plane-partition count and the box product."""
    a, b, c = spec.box
    return {"configurations": count_configs(spec),
            "plane_partitions": sum(1 for _ in enumerate_plane_partitions(a, b, c)),
            "product_formula": macmahon_count(a, b, c)}


def suite_count(seed: int = 0, max_side: int = 3) -> list[Case]:
    """Every box a x b x c with sides <= max_side; L = a + b, N = b, M = b + c."""
    cases = []
    for a in range(max_side + 1):
        for b in range(max_side + 1):
            for c in range(max_side + 1):
                spec = LatticeSpec(a + b, b + c, b) if a + b >= 1 and b + c >= 1 else None
                if spec is None:
                    continue
                r = count_report(spec)
                vals = set(r.values())
                cases.append(Case(f"count/{a}x{b}x{c}", {**_spec_inputs(spec), "box": [a, b, c]},
                                  str(r["product_formula"]), str(r["configurations"]),
                                  len(vals) == 1, {k: str(v) for k, v in r.items()}))
    return cases


SUITES: dict[str, Callable[..., list[Case]]] = {
    "theorem1": suite_theorem1,
    "theorem2-chain": suite_theorem2_chain,
    "free-eigenvalues": suite_free_eigenvalues,
    "painleve": suite_painleve,
    "rll": suite_rll,
    "commutation16": suite_commutation16,
    "action-lemma": suite_action_lemma,
    "symmetry": suite_symmetry,
    "appendix-b": suite_appendix_b,
    "lemma-dets": suite_lemma_dets,
    "derivative-formula": suite_derivative_formula,
    "count": suite_count,
}
