"""Cascade of a one-position waiting-time change down the queue.

Dropping a job's wait by some amount only helps followers while they are
actually queued (w > 0); a leader absorbs the change completely. Raising a
wait passes through queued stretches unchanged and is damped by leaders'
slack. Both cascades are one left-to-right recursion over the profile's
signed waits, carried one slot past the last position (the sentinel) so the
last job's own truncated-wait change is captured too.

Traces bind to the profile they were computed from and carry it, so a
trace can never outlive its waits. Reusing one after the underlying
sequence was edited elsewhere is a caller error the types cannot catch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .timeline import WaitingProfile

DECREASE = "decrease"
INCREASE = "increase"


@dataclass(frozen=True)
class FlowTrace:
    """Propagated magnitudes from ``origin`` through the sentinel.

    ``values[m]`` is the magnitude at position ``origin + m``; the first
    entry is the injected amount, the last is the sentinel at n+1. All
    entries are nonnegative; the kind carries the sign.
    """

    kind: str
    origin: int
    values: tuple[int, ...]
    profile: WaitingProfile

    def value_at(self, position: int) -> int:
        """Magnitude reaching ``position`` (origin..n+1)."""
        if not self.origin <= position <= self.profile.n + 1:
            raise ValueError(f"position {position} outside {self.origin}..{self.profile.n + 1}")
        return self.values[position - self.origin]


def propagate_decrease(profile: WaitingProfile, j: int, delta: int) -> FlowTrace:
    """Min recursion for a wait drop of ``delta`` at position j.

    value[k+1] = 0 where w_k <= 0 (leader absorbs), else min(value[k], w_k).
    """
    _check_injection(profile, j, delta)
    values = [delta]
    current = delta
    for k in range(j, profile.n + 1):
        w = profile.waits[k - 1]
        current = 0 if w <= 0 else min(current, w)
        values.append(current)
    return FlowTrace(kind=DECREASE, origin=j, values=tuple(values), profile=profile)


def propagate_increase(profile: WaitingProfile, j: int, delta: int) -> FlowTrace:
    """Max recursion: a wait rise of ``delta`` at position j.

    value[k+1] = value[k] where w_k > 0 (queued stretch passes it through),
    else max(0, value[k] + w_k) (leader slack damps it).
    """
    _check_injection(profile, j, delta)
    values = [delta]
    current = delta
    for k in range(j, profile.n + 1):
        w = profile.waits[k - 1]
        current = current if w > 0 else max(0, current + w)
        values.append(current)
    return FlowTrace(kind=INCREASE, origin=j, values=tuple(values), profile=profile)


def objective_delta(trace: FlowTrace) -> int:
    """Exact change in sum(max(0, w)) if the traced perturbation is realized.

    Each position k's truncated-wait change equals the value transmitted to
    k+1, so the total is the signed sum of values over origin+1..n+1,
    sentinel included.
    """
    tail = sum(trace.values[1:])
    return tail if trace.kind == INCREASE else -tail


def _check_injection(profile: WaitingProfile, j: int, delta: int) -> None:
    if not 1 <= j <= profile.n:
        raise ValueError(f"origin {j} out of range 1..{profile.n}")
    if delta < 0:
        raise ValueError(f"injected magnitude must be nonnegative, got {delta}")
