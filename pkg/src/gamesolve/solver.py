"""Brute-force ground truth: memoized Grundy values and outcomes, plus the
local verifiers that make the loopy extended families checkable.

Grundy/outcome recursion is only defined for the acyclic families; the
extended (add-move) families are handled exclusively by ``verify_pset``
and ``verify_grundy_consistency``, which check local consistency of a
claimed labeling without ever solving the loopy graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .core import (
    Convention,
    LoopyFamily,
    Outcome,
    Position,
    RuleSet,
    successors,
)


def mex(values: Iterable[int]) -> int:
    """Smallest non-negative integer absent from the set."""
    present = set(values)
    g = 0
    while g in present:
        g += 1
    return g


@dataclass
class MemoTable:
    """Write-once cache of solved positions, keyed by rules and convention."""

    grundy_values: dict = field(default_factory=dict)
    outcomes: dict = field(default_factory=dict)
    hits: int = 0
    misses: int = 0


def grundy(rules: RuleSet, p: Position, memo: MemoTable | None = None) -> int:
    """Grundy value of p: mex over successor values, terminal -> 0.

    Iterative post-order over the (acyclic) game DAG, so large domains
    never hit the interpreter recursion limit.
    """
    if rules.family.loopy:
        raise LoopyFamily(f"{rules.family.value} has add-moves; use the verifiers")
    if memo is None:
        memo = MemoTable()
    table = memo.grundy_values
    if (rules, p) in table:
        memo.hits += 1
        return table[(rules, p)]
    memo.misses += 1
    stack = [p]
    while stack:
        cur = stack[-1]
        if (rules, cur) in table:
            stack.pop()
            continue
        succ = successors(rules, cur)
        pending = [s for s in succ if (rules, s) not in table]
        if pending:
            stack.extend(pending)
        else:
            table[(rules, cur)] = mex(table[(rules, s)] for s in succ)
            stack.pop()
    return table[(rules, p)]


def outcome(
    rules: RuleSet,
    convention: Convention,
    p: Position,
    memo: MemoTable | None = None,
) -> Outcome:
    """P/N outcome of p under the given convention.

    Terminal is P in normal play and N in misere play (the previous
    player made the last move); a nonterminal position is N iff some
    successor is P.
    """
    if rules.family.loopy:
        raise LoopyFamily(f"{rules.family.value} has add-moves; use the verifiers")
    if memo is None:
        memo = MemoTable()
    table = memo.outcomes
    key = (rules, convention, p)
    if key in table:
        memo.hits += 1
        return table[key]
    memo.misses += 1
    terminal_outcome = Outcome.P if convention is Convention.NORMAL else Outcome.N
    stack = [p]
    while stack:
        cur = stack[-1]
        if (rules, convention, cur) in table:
            stack.pop()
            continue
        succ = successors(rules, cur)
        if not succ:
            table[(rules, convention, cur)] = terminal_outcome
            stack.pop()
            continue
        pending = [s for s in succ if (rules, convention, s) not in table]
        if pending:
            stack.extend(pending)
        else:
            any_p = any(table[(rules, convention, s)] is Outcome.P for s in succ)
            table[(rules, convention, cur)] = Outcome.N if any_p else Outcome.P
            stack.pop()
    return table[key]


@dataclass(frozen=True)
class Domain:
    """Finite set of canonical positions: length <= max_piles, entries in
    1..max_entry (canonical forms carry no zeros)."""

    max_piles: int
    max_entry: int
    ordered: bool = True

    def __contains__(self, p: Position) -> bool:
        return len(p) <= self.max_piles and all(
            1 <= e <= self.max_entry for e in p
        )


def enumerate_positions(domain: Domain) -> Iterator[Position]:
    """Every canonical position in the domain, once, in lexicographic order.

    Canonical positions are non-decreasing for ordered and order-free
    families alike, so one enumeration serves both.
    """

    def rec(prefix: list[int], lo: int) -> Iterator[Position]:
        yield tuple(prefix)
        if len(prefix) == domain.max_piles:
            return
        for v in range(lo, domain.max_entry + 1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], 1)


def enumerate_raw_sequences(max_len: int, max_entry: int) -> Iterator[tuple]:
    """Every non-decreasing raw sequence (zeros allowed) with at most
    max_len entries, each <= max_entry, in lexicographic order.  Raw
    sequences feed the monotone-game difference map, where zero padding
    and length parity matter before canonicalization."""

    def rec(prefix: list[int], lo: int) -> Iterator[tuple]:
        yield tuple(prefix)
        if len(prefix) == max_len:
            return
        for v in range(lo, max_entry + 1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], 0)


@dataclass
class VerificationReport:
    checked_count: int = 0
    skipped_boundary_count: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def add(self, p: Position, reason: str) -> None:
        self.counterexamples.append((p, reason))

    def to_dict(self) -> dict:
        return {
            "checked": self.checked_count,
            "skipped_boundary": self.skipped_boundary_count,
            "counterexamples": [
                {"position": list(p), "reason": reason}
                for p, reason in self.counterexamples
            ],
            "ok": self.ok,
        }


def verify_pset(
    rules: RuleSet,
    convention: Convention,
    claimed_p: Callable[[Position], bool],
    domain: Domain,
) -> VerificationReport:
    """Check a claimed P-set locally over a finite domain.

    For each position: terminals must carry the convention's terminal
    label; a claimed P-position must have no in-domain P-successor; a
    claimed N-position must have an in-domain P-successor, except that
    positions with successors outside the domain are only counted as
    skipped when no in-domain witness exists (the witness might live
    outside).  A P->P edge inside the domain is always a hard failure.
    """
    report = VerificationReport()
    terminal_is_p = convention is Convention.NORMAL
    for p in enumerate_positions(domain):
        report.checked_count += 1
        succ = successors(rules, p)
        if not succ:
            if claimed_p(p) != terminal_is_p:
                report.add(p, "terminal label disagrees with convention")
            continue
        if claimed_p(p):
            for q in succ:
                if q in domain and claimed_p(q):
                    report.add(p, f"move to claimed P-position {q}")
                    break
        else:
            if any(q in domain and claimed_p(q) for q in succ):
                continue
            if any(q not in domain for q in succ):
                report.skipped_boundary_count += 1
            else:
                report.add(p, "claimed N-position with no P-successor")
    return report


def verify_grundy_consistency(
    ext_rules: RuleSet,
    labeling: Callable[[Position], int],
    domain: Domain,
) -> VerificationReport:
    """Check that a claimed Grundy labeling is mex-consistent under the
    extended move set, for positions whose successors all stay in the
    domain; positions with out-of-domain successors are skipped."""
    report = VerificationReport()
    for p in enumerate_positions(domain):
        succ = successors(ext_rules, p)
        if any(q not in domain for q in succ):
            report.skipped_boundary_count += 1
            continue
        report.checked_count += 1
        expected = mex(labeling(q) for q in succ)
        actual = labeling(p)
        if expected != actual:
            report.add(p, f"mex of successor labels {expected} != label {actual}")
    return report
