"""A full solve next to both exact oracles, plus the LP export.

The solver sweeps relocation candidates and reworks the blocks each one
induces; the oracles know nothing about any of that. On the pinned seed
they all land on the same optimum, and the exported big-M model is ready
for any external MILP solver as a third, out-of-repo check.
"""

from minwait import (
    branch_and_bound_optimum,
    brute_force_optimum,
    export_milp,
    generate_instance,
    initial_sequence,
    compute_profile,
    optimal_sort,
    serialize_instance,
)


def main() -> None:
    inst = generate_instance(9, seed=424242)
    print(serialize_instance(inst), end="")
    start = compute_profile(inst, initial_sequence(inst)).objective
    print("release-sorted start:", start)
    print()

    result = optimal_sort(inst)
    print(
        f"solver:            {result.best_objective}  order {result.best_sequence.order}"
        f"  ({result.iterations} passes, {1000 * result.elapsed:.1f} ms)"
    )
    for passno, kind, i, k, delta in result.move_log:
        print(f"  pass {passno}: {kind} candidate ({i},{k}) accepted, {delta:+d}")

    brute = brute_force_optimum(inst)
    print(
        f"brute force:       {brute.objective}  order {brute.sequence.order}"
        f"  ({brute.nodes_explored} nodes)"
    )
    bnb = branch_and_bound_optimum(inst)
    print(
        f"branch and bound:  {bnb.objective}  order {bnb.sequence.order}"
        f"  ({bnb.nodes_explored} nodes, proved={bnb.proved_optimal})"
    )
    print()

    print("first lines of the exported model:")
    for line in export_milp(inst).splitlines()[:6]:
        print(" ", line)


if __name__ == "__main__":
    main()
