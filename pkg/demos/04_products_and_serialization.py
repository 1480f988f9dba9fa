"""Track how multiplying by a transposition reshapes cycles, and save and
reload permutation expressions as JSON."""

from permdec import TranspositionTimes, even_zigzag, perm_eval
from permdec import cycles as cyc
from permdec import products as pr
from permdec.serialize import dumps, loads


def main() -> None:
    g = even_zigzag()
    w = cyc.decider_one_infinite(g)
    cf = lambda x: x % 2 == 1  # odds are fixed, evens share one infinite cycle

    # (0 8) after g splits the infinite even cycle: a finite segment
    # between 0 and 8 breaks off
    w2, cf2 = pr.transposition_times_cf(0, 8, g, w, cf)
    seg = [u for u in range(0, 20, 2) if w2.payload(4, u)]
    print("after multiplying by (0 8), the cycle of 4 is:", seg)
    print("that piece is finite:", cf2(4))
    print("the rest of the evens stay infinite:", not cf2(10))

    # (0 3) fuses the fixed point 3 into the infinite cycle
    w3, cf3 = pr.transposition_times_cf(0, 3, g, w, cf)
    print("\nafter multiplying by (0 3), 3 joins 8's cycle:", w3.payload(3, 8))
    print("3's cycle is now infinite:", not cf3(3))

    text = dumps(TranspositionTimes(0, 8, g))
    print("\nserialized product expression:")
    print(text)
    back = loads(text)
    print("reloaded expression agrees at 0..9:",
          all(perm_eval(back, x) == perm_eval(TranspositionTimes(0, 8, g), x)
              for x in range(10)))


if __name__ == "__main__":
    main()
