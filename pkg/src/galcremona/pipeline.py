"""End-to-end runs: build a curve from Kummer data, analyze a point, extend sigma.

Results are plain dataclasses; ``report`` turns them into the JSON layout
used by the command line (fixed key order, strings for exact values).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import NumberField, RationalFunctionField, embed, make_cyclotomic
from .cremona import (DeJonquieresMap, Moebius, chart_transfer, dejonquieres_lift, dj_order,
                      dj_verify_birational, pullback_divides, rho_restriction_trivial)
from .curve import (CurveError, FiberPolynomial, PlaneCurve, PointedCurve, curve_from_fiber,
                    fiber_polynomial, multiplicity_at, normalize_chart)
from .galois import (AutomorphismRep, KummerPresentation, NoMoebiusError, analyze_fiber,
                     geometric_check, kummer_minimal_polynomial, kummer_moebius_data, kummer_sigma,
                     moebius_representation, moebius_solution_space)
from .mpoly import MPoly
from .parser import parse_list, parse_point, to_mpoly, to_ratfunc
from .poly import QuotientAlgebra

CHART_NAMES = ("x0", "x1", "x2")


@dataclass(frozen=True)
class RunConfig:
    """Knobs for ``run_extend``."""

    order_bound: int = 12        # largest power tried when computing the order of a lift
    check_curve: bool = True     # test that the lift preserves the curve (pullback divisibility)


@dataclass
class Job:
    """One input block: a curve with a point, or Kummer data."""

    id: str = "input"
    curve: str | None = None
    point: str | None = None
    kummer_n: int | None = None
    q: str | None = None
    c: list[str] | None = None
    field_order: int | None = None

    @property
    def is_kummer(self) -> bool:
        return self.kummer_n is not None


def parse_job_text(text: str, default_id: str = "input") -> list[Job]:
    """key = value lines; blank lines separate jobs; '#' starts a comment.

    ``kummer = n; q = <ratfunc>; c = [c0, ..., c_(n-1)]`` may share one line.
    """
    jobs: list[Job] = []
    cur: dict[str, str] = {}

    def flush():
        if cur:
            name = default_id if not jobs else f"{default_id}-{len(jobs) + 1}"
            jobs.append(_job_from(dict(cur), name))
            cur.clear()

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush()
            continue
        for part in _split_semicolons(line):
            if "=" not in part:
                raise ValueError(f"expected key = value, got {part!r}")
            key, value = part.split("=", 1)
            cur[key.strip().lower()] = value.strip()
    flush()
    return jobs


def _split_semicolons(line: str) -> list[str]:
    out, depth, buf = [], 0, []
    for ch in line:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == ";" and depth == 0:
            out.append("".join(buf).strip())
            buf = []
        else:
            buf.append(ch)
    if "".join(buf).strip():
        out.append("".join(buf).strip())
    return out


def _job_from(d: dict[str, str], default_id: str) -> Job:
    known = {"id", "curve", "point", "kummer", "q", "c", "field"}
    extra = set(d) - known
    if extra:
        raise ValueError(f"unknown keys: {sorted(extra)}")
    job = Job(id=d.get("id", default_id), curve=d.get("curve"), point=d.get("point"))
    if "field" in d:
        job.field_order = int(d["field"])
    if "kummer" in d:
        job.kummer_n = int(d["kummer"])
        if "q" not in d or "c" not in d:
            raise ValueError("Kummer input needs q and c")
        job.q = d["q"]
        job.c = parse_list(d["c"])
    elif job.curve is None:
        raise ValueError("input block needs either curve or kummer")
    return job


# ---------------------------------------------------------------------------
# runs
# ---------------------------------------------------------------------------

@dataclass
class Analysis:
    id: str
    status: str
    curve: PlaneCurve | None = None
    pointed: PointedCurve | None = None
    fiber: FiberPolynomial | None = None
    chart_form: MPoly | None = None
    degree: int | None = None
    multiplicity: int | None = None
    projection_degree: int | None = None
    is_galois: bool | None = None
    group_order: int | None = None
    sigma: AutomorphismRep | None = None
    moebius: Moebius | None = None
    factor: Moebius | None = None
    kummer: KummerPresentation | None = None
    solution_dimension: int | None = None
    lift: DeJonquieresMap | None = None
    birational: bool | None = None
    lift_order: int | None = None
    preserves_curve: bool | None = None
    rho_trivial: bool | None = None
    diagnostics: list[str] = field(default_factory=list)


def _field_for(order: int | None, minimum: int = 1) -> NumberField:
    n = order or minimum
    if n % minimum:
        raise ValueError(f"field order {n} does not contain the {minimum}-th roots of unity")
    return make_cyclotomic(n)


def kummer_from_job(job: Job) -> KummerPresentation:
    n = job.kummer_n
    nf = _field_for(job.field_order, n)
    K = RationalFunctionField(nf, "t")
    q = to_ratfunc(job.q, K)
    cs = tuple(to_ratfunc(c, K) for c in job.c)
    return KummerPresentation(n, q, cs, nf.root_of_unity(n))


def run_build(job: Job) -> Analysis:
    """Kummer data -> fiber polynomial -> plane curve, with the multiplicity at the origin."""
    kp = kummer_from_job(job)
    h = kummer_minimal_polynomial(kp)
    curve = curve_from_fiber(h)
    m = multiplicity_at(curve, (0, 0, 1))
    res = Analysis(job.id, "ok", curve=curve, fiber=h, degree=curve.degree, multiplicity=m,
                   projection_degree=curve.degree - m, kummer=kp,
                   diagnostics=list(h.diagnostics))
    res.chart_form = curve.form
    res.diagnostics.append(f"irreducibility: {curve.irreducibility}"
                           + (f" ({curve.certificate})" if curve.certificate else ""))
    return res


def run_analyze(job: Job) -> Analysis:
    if job.is_kummer:
        return _analyze_kummer(job)
    nf = _field_for(job.field_order)
    f = to_mpoly(job.curve, ("x", "y"), nf)
    curve = PlaneCurve(f)
    point = parse_point(job.point or "(0 : 0 : 1)", nf)
    pc = normalize_chart(curve, point)
    res = Analysis(job.id, "ok", curve=curve, pointed=pc, degree=curve.degree,
                   multiplicity=pc.multiplicity, projection_degree=pc.projection_degree)
    res.diagnostics.append(f"irreducibility: {curve.irreducibility}")
    try:
        h = fiber_polynomial(pc)
    except CurveError as exc:
        res.status = "error"
        res.diagnostics.append(str(exc))
        return res
    res.fiber = h
    rep = analyze_fiber(h)
    res.diagnostics.extend(rep.diagnostics)
    if rep.is_galois is None:
        res.status = "unsupported degree"
        return res
    res.is_galois = rep.is_galois
    if not rep.is_galois:
        return res
    res.fiber = rep.fiber
    target = rep.fiber.K.nf
    res.chart_form = pc.chart_curve.form.map_coeffs(lambda a: embed(a, target), target)
    res.group_order = rep.group_order
    res.sigma = rep.sigma
    res.moebius = rep.moebius
    res.kummer = rep.kummer
    res.solution_dimension = rep.solution_dimension
    return res


def _analyze_kummer(job: Job) -> Analysis:
    res = run_build(job)
    kp = res.kummer
    h = res.fiber
    res.is_galois = h.degree == kp.n and h.certified
    if not geometric_check(kp.coeffs[1:]) and not (kp.n == 3 and not kp.coeffs[1]):
        return _analyze_kummer_linear(res, kp)
    data = kummer_moebius_data(kp)
    alg = QuotientAlgebra(h.hpoly)
    sigma = AutomorphismRep(h, data.composite(alg.x))
    res.sigma = sigma
    res.group_order = sigma.order()
    res.moebius = data.composite
    res.factor = data.factor
    res.solution_dimension = len(moebius_solution_space(sigma))
    if data.rewritten:
        res.diagnostics.append("c_1 = 0: rewritten over q' = q^2 with zeta -> zeta^2")
    return res


def _analyze_kummer_linear(res: Analysis, kp: KummerPresentation) -> Analysis:
    """Non-geometric coefficients: sigma from the presentation, Moebius by linear solve."""
    sigma = kummer_sigma(kp)
    res.sigma = sigma
    res.group_order = sigma.order()
    res.solution_dimension = len(moebius_solution_space(sigma))
    try:
        res.moebius = moebius_representation(sigma)
    except NoMoebiusError as exc:
        res.status = "no moebius representation"
        res.diagnostics.append(f"inconclusive: {exc}")
    return res


def run_extend(job: Job, config: RunConfig = RunConfig()) -> Analysis:
    res = run_analyze(job)
    if res.moebius is None:
        if res.status == "ok":
            res.status = "not galois" if res.is_galois is False else "no moebius representation"
        return res
    lift = dejonquieres_lift(chart_transfer(res.moebius))
    res.lift = lift
    res.birational = dj_verify_birational(lift)
    res.lift_order = dj_order(lift, bound=max(config.order_bound, res.group_order or 1))
    res.rho_trivial = rho_restriction_trivial(lift)
    if config.check_curve and res.chart_form is not None:
        res.preserves_curve = pullback_divides(lift, res.chart_form)[0]
    if not lift.check_invariants():
        res.diagnostics.append("de Jonquieres invariants violated")
    return res


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def report(res: Analysis) -> dict:
    """JSON-ready dict with a fixed key order."""
    out: dict = {
        "id": res.id,
        "status": res.status,
        "degree": res.degree,
        "multiplicity": res.multiplicity,
        "projection_degree": res.projection_degree,
        "is_galois": res.is_galois,
        "group_order": res.group_order,
        "sigma_rep": res.sigma.image.rep.to_str("x") if res.sigma else None,
        "moebius": {"entries": [str(v) for v in res.moebius.entries]} if res.moebius else None,
        "dejonquieres": None,
        "diagnostics": list(res.diagnostics),
    }
    if res.lift is not None:
        out["dejonquieres"] = {
            "components": res.lift.to_strs(CHART_NAMES),
            "degree": res.lift.degree,
            "birational": res.birational,
            "order": res.lift_order,
            "preserves_curve": res.preserves_curve,
        }
    return out


def text_report(res: Analysis) -> str:
    lines = [f"[{res.id}] status: {res.status}"]
    if res.curve is not None:
        lines.append(f"  curve: {res.curve.f.to_str(['x', 'y'])} = 0")
    for key in ("degree", "multiplicity", "projection_degree"):
        v = getattr(res, key)
        if v is not None:
            lines.append(f"  {key}: {v}")
    if res.fiber is not None:
        lines.append(f"  fiber: {res.fiber}")
    if res.is_galois is not None:
        lines.append(f"  galois: {res.is_galois}  order: {res.group_order}")
    if res.sigma is not None:
        lines.append(f"  sigma(x) = {res.sigma.image.rep.to_str('x')}")
    if res.moebius is not None:
        lines.append(f"  moebius: {res.moebius}")
    if res.factor is not None:
        lines.append(f"  factor in the radical: {res.factor}")
    if res.lift is not None:
        lines.append(f"  lift (degree {res.lift.degree}):")
        lines.extend(f"    {c}" for c in res.lift.to_strs(CHART_NAMES))
        lines.append(f"  birational: {res.birational}  order: {res.lift_order}  "
                     f"preserves curve: {res.preserves_curve}  rho trivial: {res.rho_trivial}")
    lines.extend(f"  note: {d}" for d in res.diagnostics)
    return "\n".join(lines)
