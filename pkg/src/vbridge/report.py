"""Certified intervals for the virtual and welded bridge numbers of a Gauss diagram.

Upper bounds come from the diagram itself and from move search.  Lower bounds
come from elementary ideals of four presentations (knot group and reduced
group of the diagram and of its mirror) and from the parity projection.  The
welded interval only uses channels that are invariant under the forbidden
move: the knot group of the diagram and welded or virtual search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fox import alexander_matrix
from .gauss import GaussDiagram, bridge_count, canonical_key, mirror, parse_gauss_code, to_code, to_json
from .ideals import elementary_ideal, is_trivial, rank_bound
from .parity import gaussian_parity, odd_chords, project
from .present import eliminate_conjugation_generators, knot_group, reduced_group
from .rmoves import TAIL_SWAP, VIRTUAL, WELDED
from .search import SearchBudget, as_moves, explore_escalating, replay

DIAGRAM_UPPER = "DiagramUpperBound"
SEARCH_UPPER = "SearchUpperBound"
KNOT_IDEAL = "KnotGroupIdeal"
MIRROR_KNOT_IDEAL = "MirrorKnotGroupIdeal"
REDUCED_IDEAL = "ReducedGroupIdeal"
MIRROR_REDUCED_IDEAL = "MirrorReducedGroupIdeal"
PARITY_PROJECTION = "ParityProjection"

LOWER_KINDS = (KNOT_IDEAL, MIRROR_KNOT_IDEAL, REDUCED_IDEAL, MIRROR_REDUCED_IDEAL, PARITY_PROJECTION)
UPPER_KINDS = (DIAGRAM_UPPER, SEARCH_UPPER)


class InconsistentReport(Exception):
    """A certificate failed to revalidate, or an interval came out empty."""


@dataclass(frozen=True)
class BoundCertificate:
    kind: str
    value: int
    evidence: dict
    applies_to: tuple = ("vb",)

    @property
    def is_lower(self) -> bool:
        return self.kind in LOWER_KINDS

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.value, "applies_to": list(self.applies_to), "evidence": self.evidence}


@dataclass
class InvariantReport:
    diagram: GaussDiagram
    vb_lower: int
    vb_upper: int
    wb_lower: int
    wb_upper: int
    certificates: list = field(default_factory=list)
    presentations: dict = field(default_factory=dict)

    @property
    def vb_exact(self) -> bool:
        return self.vb_lower == self.vb_upper

    @property
    def wb_exact(self) -> bool:
        return self.wb_lower == self.wb_upper

    def channel(self, kind: str):
        return next((c for c in self.certificates if c.kind == kind), None)

    def to_json(self) -> dict:
        def side(name, lower, upper, exact):
            return {
                "lower": lower,
                "upper": upper,
                "exact": exact,
                "certificates": [c.to_json() for c in self.certificates if name in c.applies_to],
            }

        parity = gaussian_parity(self.diagram)
        return {
            "input": {"code": to_code(self.diagram), "diagram": to_json(self.diagram)},
            "bridge_count": bridge_count(self.diagram),
            "vb": side("vb", self.vb_lower, self.vb_upper, self.vb_exact),
            "wb": side("wb", self.wb_lower, self.wb_upper, self.wb_exact),
            "parity": [{"chord": c, "parity": f} for c, f in sorted(parity.items())],
            "presentations": self.presentations,
        }

    def summary(self) -> str:
        def interval(lo, hi):
            return f"{lo}" if lo == hi else f"[{lo}, {hi}]"

        lines = [
            f"diagram       {to_code(self.diagram) or '(empty)'}",
            f"bridge count  {bridge_count(self.diagram)}",
            f"vb            {interval(self.vb_lower, self.vb_upper)}{'  (exact)' if self.vb_exact else ''}",
            f"wb            {interval(self.wb_lower, self.wb_upper)}{'  (exact)' if self.wb_exact else ''}",
        ]
        for c in self.certificates:
            lines.append(f"  {c.kind:<24} {c.value}  [{', '.join(c.applies_to)}]")
        return "\n".join(lines)


# -- lower-bound channels --------------------------------------------------

def _ideal_certificate(kind: str, source: GaussDiagram, presentation, applies_to) -> BoundCertificate:
    reduced = eliminate_conjugation_generators(presentation)
    bound = rank_bound(alexander_matrix(reduced))
    evidence = {
        "diagram": to_code(source),
        "presentation": reduced.to_json(),
        "k": bound.k,
        "ideal": bound.ideal.to_json() if bound.ideal is not None else None,
        "witness": {"prime": bound.witness[0], "point": list(bound.witness[1])} if bound.witness else None,
        "undecided": list(bound.undecided),
    }
    return BoundCertificate(kind, bound.value, evidence, applies_to)


def _channel_presentation(kind: str, d: GaussDiagram):
    if kind == KNOT_IDEAL:
        return d, knot_group(d)
    if kind == MIRROR_KNOT_IDEAL:
        return mirror(d), knot_group(mirror(d))
    if kind == REDUCED_IDEAL:
        return d, reduced_group(d)
    if kind == MIRROR_REDUCED_IDEAL:
        return mirror(d), reduced_group(mirror(d))
    raise ValueError(kind)


def lower_bound_certificates(d: GaussDiagram, max_projection_depth: int = 3, reduced: bool = True) -> list:
    """Certificates for every lower-bound channel of ``d``."""
    kinds = [KNOT_IDEAL, MIRROR_KNOT_IDEAL]
    if reduced:
        kinds += [REDUCED_IDEAL, MIRROR_REDUCED_IDEAL]
    certs = []
    for kind in kinds:
        source, pres = _channel_presentation(kind, d)
        applies = ("vb", "wb") if kind == KNOT_IDEAL else ("vb",)
        certs.append(_ideal_certificate(kind, source, pres, applies))
    if max_projection_depth > 0 and odd_chords(d):
        image = project(d)
        sub = lower_bound_certificates(image, max_projection_depth - 1, reduced)
        value = max(c.value for c in sub)
        evidence = {"projected": to_code(image), "certificates": [c.to_json() for c in sub]}
        certs.append(BoundCertificate(PARITY_PROJECTION, value, evidence, ("vb",)))
    return certs


# -- report ----------------------------------------------------------------

def compute_report(
    d: GaussDiagram,
    budget: SearchBudget | None = None,
    max_projection_depth: int = 3,
    search: bool = True,
    reduced: bool = True,
) -> InvariantReport:
    """Lower bounds first; search only runs while an interval is still open."""
    budget = budget or SearchBudget()
    b = bridge_count(d)
    certs = lower_bound_certificates(d, max_projection_depth, reduced)
    wb_lower = max(c.value for c in certs if "wb" in c.applies_to)
    vb_lower = max(c.value for c in certs)
    certs.append(BoundCertificate(DIAGRAM_UPPER, b, {"diagram": to_code(d)}, ("vb", "wb")))

    vb_upper = b
    if search and vb_lower < b:
        res = explore_escalating(d, VIRTUAL, budget, target_bridges=vb_lower)
        if res.min_bridge_found < vb_upper:
            vb_upper = res.min_bridge_found
            certs.append(_search_certificate(d, res, ("vb", "wb")))
    wb_upper = vb_upper
    if search and wb_lower < wb_upper:
        res = explore_escalating(d, WELDED, budget, target_bridges=wb_lower)
        if res.min_bridge_found < wb_upper:
            wb_upper = res.min_bridge_found
            certs.append(_search_certificate(d, res, ("wb",)))

    presentations = {
        "knot": str(eliminate_conjugation_generators(knot_group(d))),
        "lower": str(eliminate_conjugation_generators(knot_group(mirror(d)))),
    }
    if reduced:
        presentations["reduced"] = str(eliminate_conjugation_generators(reduced_group(d)))
    report = InvariantReport(d, vb_lower, vb_upper, wb_lower, wb_upper, certs, presentations)
    if vb_lower > vb_upper or wb_lower > wb_upper:
        raise InconsistentReport(f"empty interval: vb [{vb_lower}, {vb_upper}], wb [{wb_lower}, {wb_upper}]")
    return report


def _search_certificate(d, res, applies_to) -> BoundCertificate:
    end = replay(d, res.witness)
    evidence = {
        "move_set": res.move_set,
        "witness": [m.to_json() for m in res.witness],
        "end": to_code(end),
        "trivialized": res.trivialized,
        "states_visited": res.states_visited,
    }
    return BoundCertificate(SEARCH_UPPER, res.min_bridge_found, evidence, applies_to)


# -- revalidation ----------------------------------------------------------

def revalidate(report: InvariantReport) -> list:
    """Recompute every certificate from the input diagram; return a list of problems (empty if sound)."""
    d = report.diagram
    problems = []
    for cert in report.certificates:
        try:
            ok = _check_certificate(d, cert)
        except Exception as exc:  # a certificate that cannot even be replayed is a failure
            problems.append(f"{cert.kind}: {exc!r}")
            continue
        if not ok:
            problems.append(f"{cert.kind}: claimed {cert.value} does not recompute")
    for name, lo, hi in (("vb", report.vb_lower, report.vb_upper), ("wb", report.wb_lower, report.wb_upper)):
        lows = [c.value for c in report.certificates if c.is_lower and name in c.applies_to]
        highs = [c.value for c in report.certificates if not c.is_lower and name in c.applies_to]
        if lo != max(lows, default=1) or hi != min(highs, default=hi):
            problems.append(f"{name}: interval does not match its certificates")
        if lo > hi:
            problems.append(f"{name}: empty interval")
    if report.wb_upper > report.vb_upper:
        problems.append("wb upper bound exceeds vb upper bound")
    return problems


def _check_certificate(d: GaussDiagram, cert: BoundCertificate) -> bool:
    ev = cert.evidence
    if cert.kind == DIAGRAM_UPPER:
        return canonical_key(parse_gauss_code(ev["diagram"])) == canonical_key(d) and bridge_count(d) == cert.value
    if cert.kind == SEARCH_UPPER:
        moves = as_moves(ev["witness"])
        if ev["move_set"] == VIRTUAL and any(m.kind == TAIL_SWAP for m in moves):
            return False
        if "vb" in cert.applies_to and ev["move_set"] != VIRTUAL:
            return False
        end = replay(d, moves)
        return bridge_count(end) == cert.value and (end.n == 0) == ev["trivialized"]
    if cert.kind == PARITY_PROJECTION:
        image = project(d)
        if canonical_key(image) != canonical_key(parse_gauss_code(ev["projected"])):
            return False
        subs = [BoundCertificate(c["kind"], c["value"], c["evidence"], tuple(c["applies_to"])) for c in ev["certificates"]]
        return all(_check_certificate(image, c) for c in subs) and cert.value == max(c.value for c in subs)
    source, pres = _channel_presentation(cert.kind, d)
    if canonical_key(source) != canonical_key(parse_gauss_code(ev["diagram"])):
        return False
    eliminated = eliminate_conjugation_generators(pres)
    mat = alexander_matrix(eliminated)
    if ev["k"] is None:
        return cert.value == 1
    ideal = elementary_ideal(mat, ev["k"])
    if [str(g) for g in ideal.generators] != ev["ideal"]["generators"]:
        return False
    if is_trivial(ideal):
        return False
    w = ev["witness"]
    if w is not None and any(g.evaluate_mod(w["point"], w["prime"]) for g in ideal.generators):
        return False
    return cert.value == ev["k"] + 1
