"""How a one-position wait change travels down the queue.

A decrease is capped by every wait it passes and dies at the first queue
leader; an increase passes queued stretches untouched and is damped by
leader slack. The value carried one slot past the end (the sentinel) is
what the last job's truncated wait loses or gains.
"""

from minwait import (
    Sequence,
    compute_profile,
    objective_delta,
    parse_instance,
    propagate_decrease,
    propagate_increase,
)

INSTANCE = "5\n0 5\n3 3\n7 4\n20 5\n24 6\n"


def show(trace, label):
    span = range(trace.origin, trace.profile.n + 2)
    cells = ", ".join(f"{pos}:{trace.value_at(pos)}" for pos in span)
    print(f"{label}: {cells}   -> objective change {objective_delta(trace)}")


def main() -> None:
    inst = parse_instance(INSTANCE)
    profile = compute_profile(inst, Sequence(order=(1, 2, 3, 4, 5)))
    print("waits:", profile.waits)
    print()

    show(propagate_decrease(profile, 2, 3), "drop 3 at position 2")
    print("  capped by w=2 then w=1, dead at the leader on position 4")
    print()
    show(propagate_increase(profile, 4, 5), "raise 5 at position 4")
    print("  the leader's slack (w=-8) swallows a rise of 5 whole")
    print()
    show(propagate_increase(profile, 4, 10), "raise 10 at position 4")
    print("  only 2 units survive the slack; they ride through position 5")


if __name__ == "__main__":
    main()
