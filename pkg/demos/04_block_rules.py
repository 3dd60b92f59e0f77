"""The two block rules that rework a relocation's side effects.

Adjacent exchange bubbles long jobs backward inside a block that received
an increasing flow; bottleneck breakthrough pulls a waiting job in front
of a position that caps an incoming decreasing flow. Both accept a change
only when the block's realized cost (entry shifted by the flow) strictly
drops, so every decision is an exact integer comparison.
"""

from minwait import (
    Instance,
    ROLE_DECREASING,
    ROLE_INCREASING,
    SegmentContext,
    Sequence,
    adjacent_exchange,
    bottleneck_breakthrough,
    certify_global,
    segment_cost,
    segment_profile,
)


def main() -> None:
    print("adjacent exchange")
    inst = Instance(n=3, release=(0, 1, 2), processing=(2, 5, 3))
    seq = Sequence(order=(1, 2, 3))
    ctx = SegmentContext(start=1, stop=3, role=ROLE_INCREASING, flow_in=0, entry_time=0)
    out, change = adjacent_exchange(ctx, inst, seq)
    print(f"  {seq.order} -> {out.order}, cost change {change:+d}")
    spt = tuple(sorted(range(1, 4), key=inst.p))
    certified = certify_global(ctx, segment_profile(inst, spt, 0))
    print(f"  certificate says the exchanged order is globally optimal: {certified}")
    print()

    print("bottleneck breakthrough")
    # a flow of 50 reaches this block, but the tiny wait at position 2
    # (w=1) caps what can be transmitted; the waiting job behind it is
    # pulled in front to restore the cascade
    inst = Instance(n=3, release=(20, 104, 60), processing=(5, 30, 3))
    seq = Sequence(order=(1, 2, 3))
    entry, flow = 100, 50
    print("  baseline waits at entry", entry, ":", segment_profile(inst, seq.order, entry).waits)
    ctx = SegmentContext(start=1, stop=3, role=ROLE_DECREASING, flow_in=flow, entry_time=entry)
    out, change = bottleneck_breakthrough(ctx, inst, seq)
    print(f"  {seq.order} -> {out.order}, realized cost change {change:+d}")
    before = segment_cost(inst, seq.order, entry - flow)
    after = segment_cost(inst, out.order, entry - flow)
    print(f"  cost at the flow-shifted entry: {before} -> {after}")


if __name__ == "__main__":
    main()
