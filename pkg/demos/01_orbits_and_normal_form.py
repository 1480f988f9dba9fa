"""Walk orbits of a computable permutation and rebuild its normal form.

The running example is a permutation with a single two-way infinite cycle
on the even numbers (... 6, 2, 0, 4, 8 ...) and every odd number fixed.
Its normal form lists each cycle in increasing order when powers are taken
in the zig-zag order 0, -1, 1, -2, 2, ...
"""

from permdec import even_zigzag, orbit_window, perm_eval
from permdec import cycles as cyc
from permdec import normalform as nf


def main() -> None:
    g = even_zigzag()
    print("g maps:", {x: perm_eval(g, x) for x in range(0, 10)})

    print("\nzig-zag orbit of 0 (power, value):")
    for k, v in orbit_window(g, 0, 7):
        print(f"  g^{k}(0) = {v}")

    w = cyc.decider_one_infinite(g)
    d = cyc.witness_convert(w, cyc.DECIDER)
    print("\n0 and 8 share a cycle:", d.payload(0, 8))
    print("0 and 3 share a cycle:", d.payload(0, 3))

    m, probes = nf.normal_min_with_probes(g, 40)
    print(f"\nleast element of 40's cycle: {m} (found in {probes} probes)")

    report = nf.normality_report(g, 30)
    print("every cycle in the window is normal:", report.all_normal)


if __name__ == "__main__":
    main()
