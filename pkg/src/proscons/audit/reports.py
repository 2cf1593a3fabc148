"""Report-level audits: relation properties, refinement chains, theorem bundles.

These compose the axiom checks into the larger claims the engine is meant
to certify mechanically: which rules are complete or transitive, which
rule refines which, and the two characterization bundles: the axiom set
that singles out the order-of-magnitude rule, and the premise set that
singles out the signed-count levelwise rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from ..core import DecisionUniverse, ProblemError, TrivialUniverseError
from ..encodings import compare_bilexi_np, compare_np
from ..rules import Rule, compare, compare_impl, compare_impl_cases, ground_relation
from .axioms import (
    Axiom,
    AuditVerdict,
    Witness,
    _first,
    _strict,
    _sym,
    _transitive_violation,
    _weak,
    check_axiom,
    register_replay,
)
from .matrices import (
    AuditContext,
    capacity_bilexi_weak_matrix,
    impl_cases_weak,
    np_weak_matrix,
)
from .space import PAIRWISE_BOUND, TUPLE_BOUND, guard_size, iter_universes


class NoWitnessFoundError(ProblemError):
    """A witness search exhausted its space without finding one."""


def _ctx(universe, context):
    if universe.is_trivial:
        raise TrivialUniverseError("audits require a non-trivial universe")
    return context if context is not None else AuditContext(universe)


# ---------------------------------------------------------------------------
# Relation properties
# ---------------------------------------------------------------------------

def relation_properties(
    rule: Rule,
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
) -> dict[str, AuditVerdict]:
    """Completeness, reflexivity and the transitivity family for one rule."""
    guard_size(universe, TUPLE_BOUND)
    ctx = _ctx(universe, context)
    rel = ctx.rel(rule)
    space = ctx.space

    out: dict[str, AuditVerdict] = {}
    out["complete"] = check_axiom(Axiom.COMPLETENESS, rule, universe, context=ctx)

    refl = bool(rel.weak.diagonal().all())
    refl_witness = None
    if not refl:
        i = int(np.argmin(rel.weak.diagonal()))
        refl_witness = Witness(profiles=(space.members(i),))
    out["reflexive"] = AuditVerdict("reflexive", rule, refl, refl_witness)

    out["transitive"] = check_axiom(Axiom.TRANSITIVITY, rule, universe, context=ctx)
    out["quasitransitive"] = check_axiom(
        Axiom.QUASI_TRANSITIVITY, rule, universe, context=ctx
    )

    sym_witness = _transitive_violation(space, rel.sym)
    out["sym_transitive"] = AuditVerdict(
        "sym_transitive", rule, sym_witness is None, sym_witness
    )
    return out


def _replay_reflexive(rule, u, w):
    a = u.option(w.profiles[0])
    return not compare(rule, a, a).first_weak


def _replay_sym_transitive(rule, u, w):
    a, b, c = (u.option(p) for p in w.profiles)
    return _sym(rule, a, b) and _sym(rule, b, c) and not _sym(rule, a, c)


register_replay("reflexive", _replay_reflexive)
register_replay("sym_transitive", _replay_sym_transitive)


# ---------------------------------------------------------------------------
# Refinement
# ---------------------------------------------------------------------------

def refinement_name(coarse: Rule, fine: Rule) -> str:
    return f"refines:{coarse.value}->{fine.value}"


def refinement_check(
    coarse: Rule,
    fine: Rule,
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
) -> AuditVerdict:
    """Does the fine rule preserve every strict preference of the coarse one?"""
    guard_size(universe, PAIRWISE_BOUND)
    ctx = _ctx(universe, context)
    viol = ctx.rel(coarse).strict & ~ctx.rel(fine).strict
    hit = _first(viol)
    witness = None
    if hit:
        a, b = hit
        witness = Witness(
            profiles=(ctx.space.members(a), ctx.space.members(b)),
            note=refinement_name(coarse, fine),
        )
    return AuditVerdict(refinement_name(coarse, fine), fine, hit is None, witness)


def _make_refinement_replay(coarse: Rule):
    def _replay(rule, u, w):
        a, b = (u.option(p) for p in w.profiles)
        return _strict(coarse, a, b) and not _strict(rule, a, b)

    return _replay


for _coarse in Rule:
    for _fine in Rule:
        register_replay(refinement_name(_coarse, _fine), _make_refinement_replay(_coarse))


def find_strictness_witness(
    coarse: Rule,
    fine: Rule,
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
) -> Witness | None:
    """First pair the coarse rule leaves unresolved but the fine rule decides."""
    ctx = _ctx(universe, context)
    viol = ctx.rel(fine).strict & ~ctx.rel(coarse).strict
    hit = _first(viol)
    if hit is None:
        return None
    a, b = hit
    return Witness(profiles=(ctx.space.members(a), ctx.space.members(b)))


# ---------------------------------------------------------------------------
# Indifference intransitivity of the order-of-magnitude rule
# ---------------------------------------------------------------------------

def find_biposs_indifference_intransitivity(
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
) -> Witness:
    """First profile triple showing the single-scale rule's indifference is not transitive.

    The classic shape has the middle profile internally conflicted at the
    top of the scale, which ties it to everything.  Searches all triples
    in lexicographic order and raises ``NoWitnessFoundError`` when the
    universe is too degenerate to contain one.
    """
    guard_size(universe, TUPLE_BOUND)
    ctx = _ctx(universe, context)
    sym = ctx.rel(Rule.BIPOSS).sym
    witness = _transitive_violation(ctx.space, sym)
    if witness is None:
        raise NoWitnessFoundError(
            "indifference is transitive on this universe; "
            "need two positive levels and both polarities"
        )
    return Witness(profiles=witness.profiles, note="biposs_sym_intransitive")


def _replay_biposs_intransitive(rule, u, w):
    a, b, c = (u.option(p) for p in w.profiles)
    return (
        _sym(Rule.BIPOSS, a, b)
        and _sym(Rule.BIPOSS, b, c)
        and not _sym(Rule.BIPOSS, a, c)
    )


register_replay("biposs_sym_intransitive", _replay_biposs_intransitive)


# ---------------------------------------------------------------------------
# Independence consequences (used by the levelwise rule's audit)
# ---------------------------------------------------------------------------

COROLLARY_CHECKS = (
    "add_indifferent_set",
    "swap_indifferent_sets",
    "swap_indifferent_singletons",
)


def independence_corollaries(
    rule: Rule,
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
) -> dict[str, AuditVerdict]:
    """Exchange principles that follow from transitivity plus independence.

    * adding a set indifferent to nothing, disjoint from one side;
    * swapping two mutually indifferent sets disjoint from both sides;
    * swapping two mutually indifferent single arguments.
    """
    guard_size(universe, TUPLE_BOUND)
    ctx = _ctx(universe, context)
    rel = ctx.rel(rule)
    space = ctx.space
    masks = np.arange(space.size, dtype=np.int64)
    out: dict[str, AuditVerdict] = {}

    # Adding C with C ~ empty, C disjoint from A, must not disturb A's comparisons.
    witness = None
    for c in range(1, space.size):
        if not rel.sym[c, 0]:
            continue
        free = space.disjoint_from(c)
        left = rel.weak[free, :] != rel.weak[free | c, :]
        right = (rel.weak[:, free] != rel.weak[:, free | c]).T
        hit = _first(left | right)
        if hit:
            ai, b = hit
            witness = Witness(
                profiles=(
                    space.members(int(free[ai])),
                    space.members(b),
                    space.members(c),
                )
            )
            break
    out["add_indifferent_set"] = AuditVerdict(
        "add_indifferent_set", rule, witness is None, witness
    )

    # Swapping C ~ D across the two sides, both disjoint from A and B.
    witness = None
    for c, d in np.argwhere(rel.sym):
        if c == d:
            continue
        free = space.disjoint_from(int(c) | int(d))
        plain = rel.weak[np.ix_(free, free)]
        swapped = rel.weak[np.ix_(free | int(c), free | int(d))]
        hit = _first(plain != swapped)
        if hit:
            ai, bj = hit
            witness = Witness(
                profiles=(
                    space.members(int(free[ai])),
                    space.members(int(free[bj])),
                    space.members(int(c)),
                    space.members(int(d)),
                )
            )
            break
    out["swap_indifferent_sets"] = AuditVerdict(
        "swap_indifferent_sets", rule, witness is None, witness
    )

    # Swapping single arguments x ~ y; x may already sit in B, y in A.
    witness = None
    for i, x_name in enumerate(space.names):
        xb = 1 << i
        for j, y_name in enumerate(space.names):
            yb = 1 << j
            if not rel.sym[xb, yb]:
                continue
            rows = masks[(masks & xb) == 0]
            cols = masks[(masks & yb) == 0]
            plain = rel.weak[np.ix_(rows, cols)]
            swapped = rel.weak[np.ix_(rows | xb, cols | yb)]
            hit = _first(plain != swapped)
            if hit:
                ai, bj = hit
                witness = Witness(
                    profiles=(
                        space.members(int(rows[ai])),
                        space.members(int(cols[bj])),
                    ),
                    args=(x_name, y_name),
                )
                break
        if witness:
            break
    out["swap_indifferent_singletons"] = AuditVerdict(
        "swap_indifferent_singletons", rule, witness is None, witness
    )
    return out


def _replay_add_indifferent_set(rule, u, w):
    a, b, c = (u.option(p) for p in w.profiles)
    if a.members & c.members or not _sym(rule, c, u.empty):
        return False
    return (
        _weak(rule, a, b) != _weak(rule, a.union(c), b)
        or _weak(rule, b, a) != _weak(rule, b, a.union(c))
    )


def _replay_swap_indifferent_sets(rule, u, w):
    a, b, c, d = (u.option(p) for p in w.profiles)
    if (a.members | b.members) & (c.members | d.members):
        return False
    if not _sym(rule, c, d):
        return False
    return _weak(rule, a, b) != _weak(rule, a.union(c), b.union(d))


def _replay_swap_indifferent_singletons(rule, u, w):
    a, b = (u.option(p) for p in w.profiles)
    x, y = (u.option({name}) for name in w.args)
    if w.args[0] in a.members or w.args[1] in b.members or not _sym(rule, x, y):
        return False
    return _weak(rule, a, b) != _weak(rule, a.union(x), b.union(y))


register_replay("add_indifferent_set", _replay_add_indifferent_set)
register_replay("swap_indifferent_sets", _replay_swap_indifferent_sets)
register_replay("swap_indifferent_singletons", _replay_swap_indifferent_singletons)


# ---------------------------------------------------------------------------
# Encoding equivalences
# ---------------------------------------------------------------------------

def encoding_equivalence(
    universe: DecisionUniverse,
    *,
    base: int | None = None,
    context: AuditContext | None = None,
) -> dict[str, AuditVerdict]:
    """Do the numeric and case-split routes agree with the defining routes?

    Checks, over every profile pair: net predisposition against the
    signed-count levelwise rule, the capacity route against the two-ledger
    levelwise rule, and the case-split route against the definitional
    implicative rule.  Witnesses replay through the scalar functions.
    """
    guard_size(universe, TUPLE_BOUND)
    ctx = _ctx(universe, context)
    space = ctx.space
    out: dict[str, AuditVerdict] = {}

    def pair_witness(hit, note):
        a, b = hit
        return Witness(profiles=(space.members(a), space.members(b)), note=note)

    hit = _first(np_weak_matrix(space, base) != ctx.rel(Rule.LEXI).weak)
    out["np_equals_lexi"] = AuditVerdict(
        "np_equals_lexi",
        Rule.LEXI,
        hit is None,
        pair_witness(hit, "np_equals_lexi") if hit else None,
    )

    hit = _first(capacity_bilexi_weak_matrix(space, base) != ctx.rel(Rule.BILEXI).weak)
    out["capacity_bilexi_equals_bilexi"] = AuditVerdict(
        "capacity_bilexi_equals_bilexi",
        Rule.BILEXI,
        hit is None,
        pair_witness(hit, "capacity_bilexi_equals_bilexi") if hit else None,
    )

    hit = _first(impl_cases_weak(space) != ctx.rel(Rule.IMPL).weak)
    out["impl_cases_agree"] = AuditVerdict(
        "impl_cases_agree",
        Rule.IMPL,
        hit is None,
        pair_witness(hit, "impl_cases_agree") if hit else None,
    )
    return out


def _replay_np_equals_lexi(rule, u, w):
    a, b = (u.option(p) for p in w.profiles)
    return compare_np(a, b) is not compare(Rule.LEXI, a, b)


def _replay_capacity_bilexi(rule, u, w):
    a, b = (u.option(p) for p in w.profiles)
    return compare_bilexi_np(a, b) is not compare(Rule.BILEXI, a, b)


def _replay_impl_cases(rule, u, w):
    a, b = (u.option(p) for p in w.profiles)
    return compare_impl(a, b) is not compare_impl_cases(a, b)


register_replay("np_equals_lexi", _replay_np_equals_lexi)
register_replay("capacity_bilexi_equals_bilexi", _replay_capacity_bilexi)
register_replay("impl_cases_agree", _replay_impl_cases)


# ---------------------------------------------------------------------------
# Characterization bundles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BundleReport:
    name: str
    rule: Rule
    checks: tuple[AuditVerdict, ...]

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.checks)

    @property
    def failures(self) -> tuple[AuditVerdict, ...]:
        return tuple(v for v in self.checks if not v.holds)


THEOREM1_AXIOMS = (
    Axiom.CA,
    Axiom.SQC,
    Axiom.NON_TRIVIALITY,
    Axiom.WEAK_UNANIMITY,
    Axiom.POS_MONOTONY,
    Axiom.NEG_MONOTONY,
    Axiom.SIMPLE_GROUNDING,
    Axiom.COMPLETENESS,
    Axiom.GNEG,
    Axiom.GCLO,
)


def theorem1_bundle(
    rule: Rule,
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
    stop_at_first_failure: bool = False,
) -> BundleReport:
    """The full premise set whose joint satisfaction pins down the single-scale rule.

    Reflexivity and quasi-transitivity first, then the bipolar axioms.
    Exactly one of the six rules passes everything on every universe;
    for each of the others some member fails somewhere, with a witness.
    """
    guard_size(universe, TUPLE_BOUND)
    ctx = _ctx(universe, context)
    rel = ctx.rel(rule)
    refl = bool(rel.weak.diagonal().all())
    refl_witness = None
    if not refl:
        i = int(np.argmin(rel.weak.diagonal()))
        refl_witness = Witness(profiles=(ctx.space.members(i),))
    checks: list[AuditVerdict] = [
        AuditVerdict("reflexive", rule, refl, refl_witness),
        check_axiom(Axiom.QUASI_TRANSITIVITY, rule, universe, context=ctx),
    ]
    if not (stop_at_first_failure and any(not v.holds for v in checks)):
        for axiom in THEOREM1_AXIOMS:
            verdict = check_axiom(axiom, rule, universe, context=ctx)
            checks.append(verdict)
            if stop_at_first_failure and not verdict.holds:
                break
    return BundleReport("theorem1", rule, tuple(checks))


THEOREM2_PREMISES = ("completeness", "transitivity", "prefindependence",
                     "refines_biposs", "unbiased_ground")


def theorem2_bundle(
    rule: Rule,
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
    stop_at_first_failure: bool = False,
) -> BundleReport:
    """Premises singling out the signed-count levelwise rule among refinements.

    Complete, transitive, independent of shared arguments, refines the
    single-scale rule's strict part, and ranks individual arguments
    exactly as the single-scale rule does.
    """
    guard_size(universe, TUPLE_BOUND)
    ctx = _ctx(universe, context)
    checks: list[AuditVerdict] = []

    def add(verdict: AuditVerdict) -> bool:
        checks.append(verdict)
        return stop_at_first_failure and not verdict.holds

    done = add(check_axiom(Axiom.COMPLETENESS, rule, universe, context=ctx))
    if not done:
        done = add(check_axiom(Axiom.TRANSITIVITY, rule, universe, context=ctx))
    if not done:
        done = add(check_axiom(Axiom.PREF_INDEPENDENCE, rule, universe, context=ctx))
    if not done:
        verdict = refinement_check(Rule.BIPOSS, rule, universe, context=ctx)
        done = add(
            AuditVerdict("refines_biposs", rule, verdict.holds, verdict.witness)
        )
    if not done:
        mine = ground_relation(rule, universe)
        base = ground_relation(Rule.BIPOSS, universe)
        unbiased = mine.outcomes == base.outcomes
        witness = None
        if not unbiased:
            n = len(mine.items)
            i, j = next(
                (i, j)
                for i in range(n)
                for j in range(n)
                if mine.outcomes[i][j] != base.outcomes[i][j]
            )
            witness = Witness(args=(mine.items[i], mine.items[j]), note="unbiased_ground")
        add(AuditVerdict("unbiased_ground", rule, unbiased, witness))
    return BundleReport("theorem2", rule, tuple(checks))


def _replay_refines_biposs(rule, u, w):
    a, b = (u.option(p) for p in w.profiles)
    return _strict(Rule.BIPOSS, a, b) and not _strict(rule, a, b)


def _replay_unbiased_ground(rule, u, w):
    def profile(item):
        return u.empty if item == "0" else u.option({item})

    a, b = (profile(item) for item in w.args)
    return compare(rule, a, b) != compare(Rule.BIPOSS, a, b)


register_replay("refines_biposs", _replay_refines_biposs)
register_replay("unbiased_ground", _replay_unbiased_ground)


REFINEMENT_CHAIN = (
    (Rule.BIPOSS, Rule.IMPL),
    (Rule.BIPOSS, Rule.DISCRI),
    (Rule.DISCRI, Rule.BILEXI),
    (Rule.BILEXI, Rule.LEXI),
)


def proposition_checks(
    universe: DecisionUniverse,
    *,
    context: AuditContext | None = None,
) -> dict[str, AuditVerdict]:
    """The expected-to-hold structural claims, bundled for sweeps and the CLI.

    Completeness and quasi-transitivity of the single-scale rule,
    transitivity of the implicative rule, the strict-refinement chain,
    the encoding equivalences, and the exchange corollaries for the
    signed-count rule.
    """
    ctx = _ctx(universe, context)
    out: dict[str, AuditVerdict] = {}
    out["biposs_complete"] = check_axiom(
        Axiom.COMPLETENESS, Rule.BIPOSS, universe, context=ctx
    )
    out["biposs_quasitransitive"] = check_axiom(
        Axiom.QUASI_TRANSITIVITY, Rule.BIPOSS, universe, context=ctx
    )
    out["impl_transitive"] = check_axiom(
        Axiom.TRANSITIVITY, Rule.IMPL, universe, context=ctx
    )
    for coarse, fine in REFINEMENT_CHAIN:
        verdict = refinement_check(coarse, fine, universe, context=ctx)
        out[verdict.check] = verdict
    out.update(encoding_equivalence(universe, context=ctx))
    for name, verdict in independence_corollaries(
        Rule.LEXI, universe, context=ctx
    ).items():
        out[f"lexi_{name}"] = verdict
    return out


# ---------------------------------------------------------------------------
# Sweep drivers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepFinding:
    universe: DecisionUniverse
    verdict: AuditVerdict


def sweep_axiom(
    axiom: Axiom,
    rule: Rule,
    *,
    max_args: int,
    levels: int,
    universes: Iterable[DecisionUniverse] | None = None,
) -> SweepFinding | None:
    """First universe (in canonical sweep order) where the axiom fails, if any."""
    for universe in universes or iter_universes(max_args, levels):
        verdict = check_axiom(axiom, rule, universe)
        if not verdict.holds:
            return SweepFinding(universe, verdict)
    return None


def sweep_bundle(
    bundle: Callable[..., BundleReport],
    rule: Rule,
    *,
    max_args: int,
    levels: int,
    expect_all_hold: bool,
) -> tuple[bool, SweepFinding | None]:
    """Run a bundle over every universe in the sweep.

    With ``expect_all_hold`` the sweep succeeds iff no check ever fails
    (returning the first failure otherwise).  Without it, the sweep plays
    the differential role: it succeeds iff some check fails somewhere,
    returning that finding as the witness.
    """
    for universe in iter_universes(max_args, levels):
        report = bundle(rule, universe, stop_at_first_failure=not expect_all_hold)
        if not report.all_hold:
            finding = SweepFinding(universe, report.failures[0])
            return (not expect_all_hold, finding)
    return (expect_all_hold, None)
