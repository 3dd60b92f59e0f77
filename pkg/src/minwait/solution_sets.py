"""Where single relocations can possibly pay off.

Forward: job i can only gain by moving past a block whose processing, net
of idle, undercuts what i's removal frees up; membership is a running-sum
test per anchor. Backward: a job that is not waiting (w <= 0) never gains
by moving earlier; candidate insertion points reach back far enough that
the cumulative freed-up time first covers the job's wait. That crossing is
a prior, not a bound: insertions past it can still pay when the deeper
idle they consume outweighs the displaced block's extra waiting, so those
positions are admitted exactly when the closed-form evaluator certifies a
strict improvement. The union of both families is the whole search space
the solver sweeps, and the suite checks it against exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instances import Instance, Sequence
from .move_calculus import BACKWARD, FORWARD, backward_move_delta
from .timeline import WaitingProfile


@dataclass(frozen=True)
class SolutionSets:
    """Per-position forward anchor sets, backward insertion sets, and their union."""

    forward: dict[int, frozenset[int]]
    backward: dict[int, frozenset[int]]

    def moves(self) -> tuple[tuple[str, int, int], ...]:
        """All (direction, i, target) triples, forward first, position order."""
        out: list[tuple[str, int, int]] = []
        for i in sorted(self.forward):
            for k in sorted(self.forward[i]):
                out.append((FORWARD, i, k))
        for i in sorted(self.backward):
            for k in sorted(self.backward[i], reverse=True):
                out.append((BACKWARD, i, k))
        return tuple(out)

    @property
    def union(self) -> frozenset[tuple[str, int, int]]:
        """Both families as one searchable space."""
        return frozenset(self.moves())


def forward_solution_set(
    profile: WaitingProfile, inst: Instance, seq: Sequence, i: int
) -> frozenset[int]:
    """Anchors k > i where the block sum p_j - (p_i - min(0, w_i)) stays <= 0."""
    if not 1 <= i <= inst.n:
        raise ValueError(f"position {i} out of range 1..{inst.n}")
    freed = inst.p(seq.job_at(i)) - min(0, profile.wait_at(i))
    members: list[int] = []
    running = 0
    for k in range(i + 1, inst.n + 1):
        running += inst.p(seq.job_at(k)) - freed
        if running <= 0:
            members.append(k)
    return frozenset(members)


def backward_solution_set(
    profile: WaitingProfile, inst: Instance, seq: Sequence, i: int
) -> frozenset[int]:
    """Insertion positions worth trying for the job at position i.

    Empty when the job is not waiting. Otherwise the set holds every
    position within j* backward steps, where j* is the smallest step count
    whose cumulative freed-up time (p - min(0, w), walking backward) first
    reaches w_i (defaulting to i-1 when no step does), plus any deeper
    position whose predicted relocation delta is strictly negative. The
    second clause is what makes the family complete: improving insertions
    past the crossing exist, rarely, when consuming deeper idle pays for
    the displaced block's extra waiting.
    """
    if not 1 <= i <= inst.n:
        raise ValueError(f"position {i} out of range 1..{inst.n}")
    w_i = profile.wait_at(i)
    if w_i <= 0:
        return frozenset()
    crossing = i - 1
    cumulative = 0
    for steps in range(1, i):
        j = i - steps
        cumulative += inst.p(seq.job_at(j)) - min(0, profile.wait_at(j))
        if w_i <= cumulative:
            crossing = steps
            break
    members = set(range(i - crossing, i))
    for k in range(1, i - crossing):
        if backward_move_delta(profile, inst, seq, i, k).delta_total < 0:
            members.add(k)
    return frozenset(members)


def full_solution_space(profile: WaitingProfile, inst: Instance, seq: Sequence) -> SolutionSets:
    """Forward and backward sets for every position."""
    forward = {
        i: forward_solution_set(profile, inst, seq, i) for i in range(1, inst.n + 1)
    }
    backward = {
        i: backward_solution_set(profile, inst, seq, i) for i in range(1, inst.n + 1)
    }
    return SolutionSets(forward=forward, backward=backward)
