"""Which finite groups occur as Galois groups of etale covers.

Everything here reduces to inequalities between generator counts of the
candidate group (or a canonical quotient of it) and ranks read off the
configuration.  Verdicts are three-valued: decision procedures return
Yes/No, necessary-condition checkers return No/Unknown, and regimes the
structure theorems do not settle return Unknown with the reason.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import (CurveConfiguration, affine_delta, delta,
                     is_connected, require_valid)
from .errors import require
from .groups import (PermutationGroup, abelianization_p_rank, is_p_group,
                     min_generators, quasi_p_part, quotient)


@dataclass(frozen=True)
class RealizabilityVerdict:
    verdict: str               # "Yes" | "No" | "Unknown"
    rule: str
    evidence: dict

    def __post_init__(self):
        assert self.verdict in ("Yes", "No", "Unknown")

    @property
    def yes(self) -> bool:
        return self.verdict == "Yes"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "evidence": dict(self.evidence),
                "rule": self.rule}


def _check_char(p):
    require(p == 0 or _is_prime(p), "BAD_CHARACTERISTIC", f"p = {p}")


def _is_prime(p):
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def affine_realizable(group: PermutationGroup, p: int, g: int, r: int,
                      delta_: int) -> RealizabilityVerdict:
    """G occurs over the affine curve iff G/p(G) needs at most 2g+r-1+delta
    generators.  For p = 0 the quasi-p part is trivial and the test is
    d(G) <= 2g+r-1+delta."""
    _check_char(p)
    require(g >= 0 and delta_ >= 0, "BAD_CONFIG_FILE", "negative invariant")
    require(r >= 1, "NOT_AFFINE", "affine curve needs at least one removed point")
    bound = 2 * g + r - 1 + delta_
    reduced = quotient(group, quasi_p_part(group, p)).image
    d = min_generators(reduced)
    evidence = {"d_G_mod_pG": d, "bound": bound,
                "g": g, "r": r, "delta": delta_}
    verdict = "Yes" if d <= bound else "No"
    return RealizabilityVerdict(verdict, "affine-abhyankar", evidence)


def pro_p_rank(config: CurveConfiguration) -> int:
    """Rank of the maximal pro-p quotient: sum of component p-ranks plus
    delta."""
    require_valid(config)
    require(config.is_projective, "NOT_PROJECTIVE")
    require(is_connected(config), "NOT_CONNECTED")
    require(config.characteristic > 0, "BAD_CHARACTERISTIC",
            "pro-p rank needs p > 0")
    return sum(c.effective_p_rank for c in config.components) + delta(config)


def hasse_witt_check(group: PermutationGroup, p: int,
                     config: CurveConfiguration) -> RealizabilityVerdict:
    """Necessary condition sigma(G) <= sum g_i + delta; never says Yes."""
    _check_char(p)
    require(p > 0, "BAD_CHARACTERISTIC", "Hasse-Witt needs p > 0")
    require_valid(config)
    require(config.is_projective, "NOT_PROJECTIVE")
    require(is_connected(config), "NOT_CONNECTED")
    sigma = abelianization_p_rank(group, p)
    bound = sum(c.genus for c in config.components) + delta(config)
    evidence = {"sigma": sigma, "bound": bound}
    if sigma > bound:
        return RealizabilityVerdict("No", "hasse-witt", evidence)
    return RealizabilityVerdict("Unknown", "hasse-witt",
                                {**evidence, "reason": "necessary condition holds"})


def nakajima_check(group: PermutationGroup, p: int,
                   config: CurveConfiguration) -> RealizabilityVerdict:
    """Necessary condition t_G <= sum g_i + delta; t_G is only computed
    for p-groups (where it equals d(G))."""
    _check_char(p)
    require(p > 0, "BAD_CHARACTERISTIC", "Nakajima condition needs p > 0")
    require_valid(config)
    require(config.is_projective, "NOT_PROJECTIVE")
    require(is_connected(config), "NOT_CONNECTED")
    bound = sum(c.genus for c in config.components) + delta(config)
    if not is_p_group(group, p):
        return RealizabilityVerdict(
            "Unknown", "nakajima",
            {"bound": bound, "reason": "t_G unsupported for non-p-groups"})
    t = min_generators(group)
    evidence = {"t_G": t, "bound": bound}
    if t > bound:
        return RealizabilityVerdict("No", "nakajima", evidence)
    return RealizabilityVerdict("Unknown", "nakajima",
                                {**evidence, "reason": "necessary condition holds"})


def projective_realizable(group: PermutationGroup, p: int,
                          config: CurveConfiguration) -> RealizabilityVerdict:
    """Etale realizability over a connected projective configuration.

    Genus-0 components make the free-product structure entirely free of
    rank delta, so the answer is exact: d(G) <= delta.  With positive
    genus the free factor still gives a Yes when d(G) <= delta, the rank
    and necessary-condition bounds give No, and the remaining cases are
    Unknown (smooth positive-genus quotients are not decided here).
    """
    _check_char(p)
    require_valid(config)
    require(config.is_projective, "NOT_PROJECTIVE")
    require(is_connected(config), "NOT_CONNECTED")
    d = min_generators(group)
    delta_ = delta(config)
    genera = [c.genus for c in config.components]
    if all(g == 0 for g in genera):
        evidence = {"d_G": d, "delta": delta_}
        verdict = "Yes" if d <= delta_ else "No"
        return RealizabilityVerdict(verdict, "free-product-genus0", evidence)

    if d <= delta_:
        return RealizabilityVerdict("Yes", "free-factor",
                                    {"d_G": d, "delta": delta_})
    rank_bound = sum(2 * g for g in genera) + delta_
    if d > rank_bound:
        return RealizabilityVerdict("No", "rank-bound",
                                    {"d_G": d, "bound": rank_bound})
    if p > 0:
        hw = hasse_witt_check(group, p, config)
        if hw.verdict == "No":
            return hw
        if is_p_group(group, p):
            nk = nakajima_check(group, p, config)
            if nk.verdict == "No":
                return nk
            rank = pro_p_rank(config)
            if d > rank:
                return RealizabilityVerdict("No", "pro-p-rank",
                                            {"d_G": d, "bound": rank})
    return RealizabilityVerdict(
        "Unknown", "structure",
        {"d_G": d, "delta": delta_, "rank_bound": rank_bound,
         "reason": "positive-genus component quotients undecided"})


def tame_realizable(group: PermutationGroup, p: int, g: int, r: int,
                    delta_: int) -> RealizabilityVerdict:
    """Tame quotients: free of rank 2g+r-1+delta away from p; when p
    divides |G| only the rank bound applies."""
    _check_char(p)
    require(g >= 0 and delta_ >= 0, "BAD_CONFIG_FILE", "negative invariant")
    require(r >= 1, "NOT_AFFINE", "tame criterion needs a removed point")
    bound = 2 * g + r - 1 + delta_
    d = min_generators(group)
    evidence = {"d_G": d, "bound": bound}
    if p == 0 or group.order() % p != 0:
        verdict = "Yes" if d <= bound else "No"
        return RealizabilityVerdict(verdict, "tame-free", evidence)
    if d > bound:
        return RealizabilityVerdict("No", "tame-rank-bound", evidence)
    return RealizabilityVerdict(
        "Unknown", "tame-rank-bound",
        {**evidence, "reason": "order divisible by p; only the rank bound applies"})
