"""Bundled regression corpus with exact expected values.

Each expected value records where it comes from: "printed" (stated with
the worked example), "oracle" (independent computation, e.g. a resultant
or sympy expansion) or "definition" (immediate).  Comparisons are exact under the
stated normalization: curves up to one scalar, Moebius matrices
projectively and up to replacing sigma by its inverse.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Callable

from .arith import RationalFunctionField, make_cyclotomic
from .cremona import Moebius, PlaneMap, pullback_divides
from .curve import PlaneCurve, forms_proportional, mat_vec, proportional
from .poly import discriminant
from .mpoly import MPoly
from .parser import to_mpoly, to_ratfunc
from .pipeline import Analysis, parse_job_text, run_extend


@dataclass(frozen=True)
class Check:
    name: str
    provenance: str
    expected: Any
    actual: Callable[["Context"], Any]
    compare: str = "eq"  # eq | curve | moebius | moebius_swap | poly


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    description: str
    input_text: str | None
    checks: tuple[Check, ...]

    def with_expected(self, check_name: str, value) -> "CorpusEntry":
        """Copy with one expected value replaced (harness self-test)."""
        checks = tuple(dataclasses.replace(c, expected=value) if c.name == check_name else c
                       for c in self.checks)
        return dataclasses.replace(self, checks=checks)


class Context:
    """Lazily runs the full pipeline for an entry."""

    def __init__(self, entry: CorpusEntry):
        self.entry = entry
        self._analysis: Analysis | None = None

    @property
    def analysis(self) -> Analysis:
        if self._analysis is None:
            (job,) = parse_job_text(self.entry.input_text, self.entry.id)
            self._analysis = run_extend(job)
        return self._analysis

    @property
    def K(self) -> RationalFunctionField:
        return self.analysis.fiber.K


@dataclass
class CheckResult:
    entry: str
    check: str
    provenance: str
    passed: bool
    diff: str = ""


# ---------------------------------------------------------------------------
# comparisons
# ---------------------------------------------------------------------------

def _compare(check: Check, ctx: Context) -> tuple[bool, str]:
    try:
        got = check.actual(ctx)
    except Exception as exc:  # failures are data here
        return False, f"raised {type(exc).__name__}: {exc}"
    exp = check.expected
    if check.compare == "eq":
        ok = got == exp
        return ok, "" if ok else f"expected {exp!r}, got {got!r}"
    if check.compare == "curve":
        nf = got.base
        want = to_mpoly(exp, ("x", "y"), nf)
        ok = forms_proportional(want.homogenize(want.total_degree), got.homogenize(got.total_degree))
        return ok, "" if ok else f"expected {exp} = 0, got {got.to_str(['x', 'y'])} = 0"
    if check.compare == "poly":
        ok = str(got) == exp
        return ok, "" if ok else f"expected {exp}, got {got}"
    if check.compare in ("moebius", "moebius_swap"):
        K = ctx.K if not isinstance(got, Moebius) else got.K
        want = Moebius(*(to_ratfunc(e, K) for row in exp for e in row), K)
        ok = got == want or (check.compare == "moebius_swap" and got == want.inverse())
        return ok, "" if ok else f"expected {want}, got {got}"
    raise ValueError(f"unknown comparison {check.compare}")


def run_entry(entry: CorpusEntry) -> list[CheckResult]:
    ctx = Context(entry)
    out = []
    for chk in entry.checks:
        ok, diff = _compare(chk, ctx)
        out.append(CheckResult(entry.id, chk.name, chk.provenance, ok, diff))
    return out


def run_corpus(entries, only: str | None = None) -> list[CheckResult]:
    results = []
    for e in sorted(entries, key=lambda e: e.id):
        if only is not None and e.id != only:
            continue
        results.extend(run_entry(e))
    return results


def format_table(results: list[CheckResult]) -> str:
    if not results:
        return "(no corpus entries selected)"
    w1 = max(len(r.entry) for r in results)
    w2 = max(len(r.check) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.entry:<{w1}}  {r.check:<{w2}}  {r.provenance:<7}  {status}"
        if r.diff:
            line += f"\n    {r.diff}"
        lines.append(line)
    n_fail = sum(not r.passed for r in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

FERMAT_QUARTIC_MODEL = ("5*x^12 - 16*x^13 + 18*x^14 - 8*x^15 + x^16 - 6*x^8*y^4 + 12*x^9*y^4"
             " - 6*x^10*y^4 + 4*x^4*y^8 - 4*x^5*y^8 - y^12")

QUARTIC_A = "x^4 - x^3*y + y^3"          # X^4 - X^3 Y + Y^3 Z
QUARTIC_A_MOVED = "(x + y)^3 - x^3*y"    # (X + Y)^3 Z - X^3 Y, P1 moved to (1 : 0 : 0)
QUARTIC_B = "x^4 - y^3"                  # X^4 - Y^3 Z

# As printed the (3, 3) entry is 16; that matrix pulls C back to X^4 - X^3 Y - Y^3 Z
# and maps C onto 8X^4 - 8X^3 Y + 4X Y^3 - Y^4 - 8Y^3 Z.
# Flipping that one sign is the only sign pattern fixing C and sending P1 to P2.
AUTOMORPHISM_A_PRINTED = ((16, -8, 0), (0, -16, 0), (4, -1, 16))
AUTOMORPHISM_A = ((16, -8, 0), (0, -16, 0), (4, -1, -16))


def _lift_checks(order: int) -> tuple[Check, ...]:
    return (
        Check("lift.invariants", "oracle", True, lambda c: c.analysis.lift.check_invariants()),
        Check("lift.birational", "oracle", True, lambda c: c.analysis.birational),
        Check("lift.order", "oracle", order, lambda c: c.analysis.lift_order),
        Check("lift.preserves_curve", "oracle", True, lambda c: c.analysis.preserves_curve),
        Check("lift.rho_trivial", "definition", True, lambda c: c.analysis.rho_trivial),
    )


def _projective_form(text: str, nf) -> MPoly:
    f = to_mpoly(text, ("x", "y"), nf)
    return f.homogenize(f.total_degree)


def automorphism_image(matrix=AUTOMORPHISM_A) -> PlaneCurve:
    Q = make_cyclotomic(1)
    A = [[Q(v) for v in row] for row in matrix]
    return PlaneCurve(to_mpoly(QUARTIC_A, ("x", "y"), Q)).transformed(A)


def automorphism_preserves(matrix=AUTOMORPHISM_A) -> bool:
    Q = make_cyclotomic(1)
    return automorphism_image(matrix).same_curve(PlaneCurve(to_mpoly(QUARTIC_A, ("x", "y"), Q)))


def automorphism_point(matrix=AUTOMORPHISM_A) -> bool:
    Q = make_cyclotomic(1)
    A = [[Q(v) for v in row] for row in matrix]
    return proportional(mat_vec(A, [Q(1), Q(1), Q(0)]), [Q(8), Q(-16), Q(3)])


def _diagonal_pullback(entries: tuple[int, int, int], n: int):
    """Pullback of X^4 - Y^3 Z under diag(zeta^a, zeta^b, zeta^c) in Q(zeta_n)."""
    nf = make_cyclotomic(n)
    z = nf.zeta
    diag = [[z ** entries[0], nf.zero, nf.zero],
            [nf.zero, z ** entries[1], nf.zero],
            [nf.zero, nf.zero, z ** entries[2]]]
    fmap = PlaneMap.from_matrix(diag, nf)
    form = _projective_form(QUARTIC_B, nf)
    ok, quotient = pullback_divides(fmap, form)
    return ok, quotient, fmap


def _diagonal_order(entries, n, bound=12):
    _, _, fmap = _diagonal_pullback(entries, n)
    g = fmap
    for k in range(1, bound + 1):
        if g.is_identity():
            return k
        g = PlaneMap([c.compose(fmap.components) for c in g.components])
    return None


def _disc_of(ctx: Context):
    return discriminant(ctx.analysis.fiber.hpoly)


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        "fermat-quartic-kummer",
        "degree-16 curve from x = 2 + q + q^2 + q^3, q^4 = t^4 + 1",
        "kummer = 4; q = t^4 + 1; c = [2, 1, 1, 1]",
        (
            Check("curve", "printed", FERMAT_QUARTIC_MODEL, lambda c: c.analysis.curve.f, "curve"),
            Check("degree", "printed", 16, lambda c: c.analysis.degree),
            Check("multiplicity", "printed", 12, lambda c: c.analysis.multiplicity),
            Check("projection_degree", "printed", 4, lambda c: c.analysis.projection_degree),
            Check("fiber", "oracle",
                  "X^4 - 8*X^3 + (-6*t^4 + 18)*X^2 + (-4*t^8 + 12*t^4 - 16)*X"
                  " - t^12 + 4*t^8 - 6*t^4 + 5",
                  lambda c: c.analysis.fiber, "poly"),
            Check("factor", "printed", (("-z", "1 - t^4"), ("-z", "1")),
                  lambda c: c.analysis.factor, "moebius"),
            Check("composite", "oracle", (("1 - z - t^4", "(1 - z)*(t^4 - 1)"),
                                           ("1 - z", "-z*t^4 + z - 1")),
                  lambda c: c.analysis.moebius, "moebius"),
            Check("group_order", "printed", 4, lambda c: c.analysis.group_order),
            Check("lift.degree", "oracle", 6, lambda c: c.analysis.lift.degree),
        ) + _lift_checks(4),
    ),
    CorpusEntry(
        "cusp-a-moved",
        "quartic (a) with P1 moved to (1 : 0 : 0)",
        f"curve = {QUARTIC_A_MOVED}\npoint = (1 : 0 : 0)",
        (
            Check("multiplicity", "oracle", 1, lambda c: c.analysis.multiplicity),
            Check("fiber", "oracle", "X^3 + 3/(t)*X^2 + 3/(t^2)*X + (-t + 1)/(t^3)",
                  lambda c: c.analysis.fiber, "poly"),
            Check("is_galois", "printed", True, lambda c: c.analysis.is_galois),
            Check("group_order", "printed", 3, lambda c: c.analysis.group_order),
            # sigma_1'(x) = y x / ((omega - 1) x + omega y) acts on 1/x as below
            Check("moebius", "printed", (("z*t", "z - 1"), ("0", "t")),
                  lambda c: c.analysis.moebius, "moebius_swap"),
            Check("solution_dimension", "oracle", 1, lambda c: c.analysis.solution_dimension),
            Check("lift.degree", "printed", 2, lambda c: c.analysis.lift.degree),
        ) + _lift_checks(3),
    ),
    CorpusEntry(
        "cusp-a-p1",
        "quartic (a) at P1 = (1 : 1 : 0)",
        f"curve = {QUARTIC_A}\npoint = (1 : 1 : 0)",
        (
            Check("multiplicity", "oracle", 1, lambda c: c.analysis.multiplicity),
            Check("is_galois", "printed", True, lambda c: c.analysis.is_galois),
            Check("group_order", "printed", 3, lambda c: c.analysis.group_order),
            Check("solution_dimension", "oracle", 1, lambda c: c.analysis.solution_dimension),
        ) + _lift_checks(3),
    ),
    CorpusEntry(
        "cusp-a-p2",
        "quartic (a) at P2 = (8 : -16 : 3)",
        f"curve = {QUARTIC_A}\npoint = (8 : -16 : 3)",
        (
            Check("multiplicity", "oracle", 1, lambda c: c.analysis.multiplicity),
            Check("is_galois", "printed", True, lambda c: c.analysis.is_galois),
            Check("group_order", "printed", 3, lambda c: c.analysis.group_order),
        ) + _lift_checks(3),
    ),
    CorpusEntry(
        "cusp-a-automorphism",
        "linear automorphism A of quartic (a) with A(P1) = P2 (sign of A[2][2] corrected)",
        None,
        (
            Check("A(C) = C", "printed", True, lambda c: automorphism_preserves()),
            Check("A(P1) = P2", "printed", True, lambda c: automorphism_point()),
            Check("printed A(P1) = P2", "printed", True,
                  lambda c: automorphism_point(AUTOMORPHISM_A_PRINTED)),
            Check("printed A(C)", "oracle", "8*x^4 - 8*x^3*y + 4*x*y^3 - y^4 - 8*y^3",
                  lambda c: automorphism_image(AUTOMORPHISM_A_PRINTED).f, "curve"),
        ),
    ),
    CorpusEntry(
        "cusp-b-flex",
        "quartic (b) at the flex P3 = (0 : 1 : 0); the relation is x^4 = y in x = X/Y, y = Z/Y",
        f"curve = {QUARTIC_B}\npoint = (0 : 1 : 0)",
        (
            Check("multiplicity", "oracle", 1, lambda c: c.analysis.multiplicity),
            Check("fiber", "oracle", "X^3 - t", lambda c: c.analysis.fiber, "poly"),
            Check("is_galois", "printed", True, lambda c: c.analysis.is_galois),
            Check("group_order", "printed", 3, lambda c: c.analysis.group_order),
            Check("moebius", "oracle", (("z", "0"), ("0", "1")),
                  lambda c: c.analysis.moebius, "moebius_swap"),
        ) + _lift_checks(3),
    ),
    CorpusEntry(
        "cusp-b-diag3",
        "diag(omega, 1, omega) preserves X^4 - Y^3 Z",
        None,
        (
            Check("divides", "printed", True, lambda c: _diagonal_pullback((1, 0, 1), 3)[0]),
            Check("residual", "oracle", "(z)", lambda c: _diagonal_pullback((1, 0, 1), 3)[1]
                  .to_str(["X", "Y", "Z"])),
            Check("order", "printed", 3, lambda c: _diagonal_order((1, 0, 1), 3)),
        ),
    ),
    CorpusEntry(
        "cusp-b-diag4",
        "diag(eta, 1, 1) preserves X^4 - Y^3 Z",
        None,
        (
            Check("divides", "printed", True, lambda c: _diagonal_pullback((1, 0, 0), 4)[0]),
            Check("residual", "oracle", "1", lambda c: _diagonal_pullback((1, 0, 0), 4)[1]
                  .to_str(["X", "Y", "Z"])),
            Check("order", "printed", 4, lambda c: _diagonal_order((1, 0, 0), 4)),
        ),
    ),
    CorpusEntry(
        "cusp-b-outer",
        "quartic (b) seen from the outer point P4 = (1 : 0 : 0), via Kummer data",
        "kummer = 4; q = 1/t^3; c = [0, 1, 0, 0]",
        (
            Check("curve", "oracle", "x*y^3 - 1", lambda c: c.analysis.curve.f, "curve"),
            Check("multiplicity", "printed", 0, lambda c: c.analysis.multiplicity),
            Check("group_order", "printed", 4, lambda c: c.analysis.group_order),
            Check("moebius", "printed", (("z", "0"), ("0", "1")),
                  lambda c: c.analysis.moebius, "moebius_swap"),
        ) + _lift_checks(4),
    ),
    CorpusEntry(
        "cubic-kummer-011",
        "x = y + y^2 with y^3 = t",
        "kummer = 3; q = t; c = [0, 1, 1]",
        (
            Check("fiber", "oracle", "X^3 - 3*t*X - t^2 - t", lambda c: c.analysis.fiber, "poly"),
            Check("discriminant", "oracle", "-27*t^4 + 54*t^3 - 27*t^2",
                  lambda c: str(_disc_of(c))),
            Check("moebius", "oracle", (("z - t", "z*t - t"), ("1 - z", "1 - z*t")),
                  lambda c: c.analysis.moebius, "moebius"),
            Check("solution_dimension", "oracle", 1, lambda c: c.analysis.solution_dimension),
        ) + _lift_checks(3),
    ),
    CorpusEntry(
        "cubic-kummer-010",
        "x = y with y^3 = t",
        "kummer = 3; q = t; c = [0, 1, 0]",
        (
            Check("fiber", "definition", "X^3 - t", lambda c: c.analysis.fiber, "poly"),
            Check("moebius", "definition", (("z", "0"), ("0", "1")),
                  lambda c: c.analysis.moebius, "moebius"),
        ) + _lift_checks(3),
    ),
    CorpusEntry(
        "non-galois",
        "curve of X^3 - X - t at the origin",
        "curve = x^4 - x^2 - y\npoint = (0 : 0 : 1)",
        (
            Check("fiber", "oracle", "X^3 - X - t", lambda c: c.analysis.fiber, "poly"),
            Check("discriminant", "oracle", "-27*t^2 + 4", lambda c: str(_disc_of(c))),
            Check("is_galois", "oracle", False, lambda c: c.analysis.is_galois),
        ),
    ),
    CorpusEntry(
        "fermat-outer",
        "Fermat cubic x^3 + y^3 + 1 from the outer point (0 : 0 : 1)",
        "curve = x^3 + y^3 + 1\npoint = (0 : 0 : 1)",
        (
            Check("multiplicity", "definition", 0, lambda c: c.analysis.multiplicity),
            Check("is_galois", "oracle", True, lambda c: c.analysis.is_galois),
            Check("group_order", "oracle", 3, lambda c: c.analysis.group_order),
        ) + _lift_checks(3),
    ),
)


def entry_ids() -> list[str]:
    return sorted(e.id for e in CORPUS)


def get_entry(entry_id: str) -> CorpusEntry:
    for e in CORPUS:
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)
