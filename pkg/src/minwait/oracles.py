"""Independent exact baselines to hold the solver to account.

Two oracles compute the true optimum without sharing any code path with
the solver: an exhaustive permutation search (small n, prefix-objective
pruning only) and a depth-first branch and bound whose lower bound is the
preemptive shortest-remaining-processing-time relaxation, a classical
valid bound for the non-preemptive problem. A text exporter emits the
disjunctive big-M formulation for any external LP/MILP solver.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass

from .instances import Instance, Sequence, initial_sequence

BRUTE_FORCE_LIMIT = 11


@dataclass(frozen=True)
class OracleResult:
    objective: int
    sequence: Sequence
    proved_optimal: bool
    nodes_explored: int
    elapsed: float


def _sequence_objective(inst: Instance, order: tuple[int, ...]) -> int:
    free_at = 0
    total = 0
    for job in order:
        r = inst.release[job - 1]
        start = free_at if free_at > r else r
        total += start - r
        free_at = start + inst.processing[job - 1]
    return total


def brute_force_optimum(inst: Instance) -> OracleResult:
    """Exact minimum by exhaustive search over all n! orders.

    Children are visited earliest-start-first so a good incumbent appears
    early; a prefix is abandoned as soon as its accrued waiting already
    matches the incumbent. Guarded to n <= 11.
    """
    if inst.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"instance too large for brute force: n={inst.n} > {BRUTE_FORCE_LIMIT}")
    started = time.perf_counter()
    release = inst.release
    processing = inst.processing
    n = inst.n

    incumbent_order = initial_sequence(inst).order
    incumbent = _sequence_objective(inst, incumbent_order)
    nodes = 0
    prefix: list[int] = []
    remaining = set(range(1, n + 1))

    def descend(free_at: int, accrued: int) -> None:
        nonlocal incumbent, incumbent_order, nodes
        if not remaining:
            if accrued < incumbent:
                incumbent = accrued
                incumbent_order = tuple(prefix)
            return
        children = sorted(
            remaining,
            key=lambda j: (
                max(free_at, release[j - 1]),
                processing[j - 1],
                j,
            ),
        )
        for job in children:
            r = release[job - 1]
            start = free_at if free_at > r else r
            added = accrued + start - r
            nodes += 1
            if added >= incumbent:
                continue
            prefix.append(job)
            remaining.discard(job)
            descend(start + processing[job - 1], added)
            remaining.add(job)
            prefix.pop()

    descend(0, 0)
    return OracleResult(
        objective=incumbent,
        sequence=Sequence(order=incumbent_order),
        proved_optimal=True,
        nodes_explored=nodes,
        elapsed=time.perf_counter() - started,
    )


def srpt_waiting_bound(inst: Instance, jobs: tuple[int, ...], start_time: int) -> int:
    """Preemptive shortest-remaining-time total waiting of ``jobs`` from ``start_time``.

    Preemption can only lower total completion, so this is an admissible
    lower bound on the waiting any non-preemptive completion of the same
    jobs accrues from the same machine-free time.
    """
    by_release = sorted(jobs, key=lambda j: (inst.release[j - 1], j))
    m = len(by_release)
    heap: list[tuple[int, int]] = []
    idx = 0
    t = start_time
    total = 0
    while heap or idx < m:
        while idx < m and inst.release[by_release[idx] - 1] <= t:
            job = by_release[idx]
            heapq.heappush(heap, (inst.processing[job - 1], job))
            idx += 1
        if not heap:
            t = inst.release[by_release[idx] - 1]
            continue
        remaining, job = heapq.heappop(heap)
        horizon = inst.release[by_release[idx] - 1] if idx < m else None
        if horizon is None or t + remaining <= horizon:
            t += remaining
            total += t - inst.release[job - 1] - inst.processing[job - 1]
        else:
            heapq.heappush(heap, (remaining - (horizon - t), job))
            t = horizon
    return total


def branch_and_bound_optimum(
    inst: Instance,
    node_limit: int | None = None,
    time_limit_ms: int | None = None,
    dominance: bool = True,
) -> OracleResult:
    """Exact optimum by depth-first search with the preemptive bound.

    States are pruned on (a) bound >= incumbent, (b) an already-seen
    unscheduled set reachable no later and no more expensively, and, when
    ``dominance`` is on, (c) branching on a job some other unscheduled job
    could finish before it even starts (delaying nothing, a strict win for
    the inserted job). Limits turn the result into a best-effort incumbent
    with proved_optimal False.
    """
    started = time.perf_counter()
    deadline = None if time_limit_ms is None else started + time_limit_ms / 1000.0
    release = inst.release
    processing = inst.processing
    n = inst.n

    incumbent_order = initial_sequence(inst).order
    incumbent = _sequence_objective(inst, incumbent_order)
    nodes = 0
    completed = True
    prefix: list[int] = []
    # mask -> pareto list of (free_at, accrued) already explored
    seen: dict[int, list[tuple[int, int]]] = {}

    def out_of_budget() -> bool:
        if node_limit is not None and nodes >= node_limit:
            return True
        if deadline is not None and time.perf_counter() > deadline:
            return True
        return False

    def dominated_state(mask: int, free_at: int, accrued: int) -> bool:
        entries = seen.get(mask)
        if entries is None:
            seen[mask] = [(free_at, accrued)]
            return False
        for t, a in entries:
            if t <= free_at and a <= accrued:
                return True
        entries[:] = [(t, a) for t, a in entries if not (free_at <= t and accrued <= a)]
        entries.append((free_at, accrued))
        return False

    def descend(mask: int, free_at: int, accrued: int, remaining: list[int]) -> None:
        nonlocal incumbent, incumbent_order, nodes, completed
        nodes += 1
        if out_of_budget():
            completed = False
            return
        if not remaining:
            if accrued < incumbent:
                incumbent = accrued
                incumbent_order = tuple(prefix)
            return
        if dominated_state(mask, free_at, accrued):
            return
        if accrued + srpt_waiting_bound(inst, tuple(remaining), free_at) >= incumbent:
            return
        children = sorted(
            remaining,
            key=lambda j: (max(free_at, release[j - 1]), processing[j - 1], j),
        )
        if dominance:
            earliest_finish = min(
                max(free_at, release[j - 1]) + processing[j - 1] for j in children
            )
            children = [j for j in children if max(free_at, release[j - 1]) < earliest_finish]
        for job in children:
            if not completed:
                return
            r = release[job - 1]
            start = free_at if free_at > r else r
            added = accrued + start - r
            if added >= incumbent:
                continue
            prefix.append(job)
            rest = [j for j in remaining if j != job]
            descend(mask | (1 << job), start + processing[job - 1], added, rest)
            prefix.pop()

    descend(0, 0, 0, list(range(1, n + 1)))
    return OracleResult(
        objective=incumbent,
        sequence=Sequence(order=incumbent_order),
        proved_optimal=completed,
        nodes_explored=nodes,
        elapsed=time.perf_counter() - started,
    )


def auto_big_m(inst: Instance) -> int:
    """Default big-M: max release plus total processing (a horizon bound)."""
    return max(inst.release) + sum(inst.processing)


def export_milp(inst: Instance, big_m: int | None = None) -> str:
    """Disjunctive big-M formulation as LP-format text.

    Variables: continuous S_i (start, bounded below by r_i) and w_i
    (waiting, w_i >= S_i - r_i); binary x_i_j for i < j, 1 when i precedes
    j. Each unordered pair gets the two disjunctive constraints. Output is
    deterministic, LF-terminated.
    """
    m = auto_big_m(inst) if big_m is None else big_m
    lines = ["Minimize"]
    lines.append(" obj: " + " + ".join(f"w_{i}" for i in range(1, inst.n + 1)))
    lines.append("Subject To")
    for i in range(1, inst.n + 1):
        for j in range(i + 1, inst.n + 1):
            # S_i + p_i <= S_j + (1 - x_ij) M
            lines.append(
                f" prec_{i}_{j}_a: S_{i} - S_{j} + {m} x_{i}_{j} <= {m - inst.p(i)}"
            )
            # S_j + p_j <= S_i + x_ij M
            lines.append(
                f" prec_{i}_{j}_b: S_{j} - S_{i} - {m} x_{i}_{j} <= {-inst.p(j)}"
            )
    for i in range(1, inst.n + 1):
        lines.append(f" wait_{i}: w_{i} - S_{i} >= {-inst.r(i)}")
    lines.append("Bounds")
    for i in range(1, inst.n + 1):
        lines.append(f" S_{i} >= {inst.r(i)}")
    lines.append("Binaries")
    for i in range(1, inst.n + 1):
        for j in range(i + 1, inst.n + 1):
            lines.append(f" x_{i}_{j}")
    lines.append("End")
    return "\n".join(lines) + "\n"
