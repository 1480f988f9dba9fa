"""Synthesize a conjugator between two permutations that share a cycle
partition, then verify f = h^-1 g h pointwise on a window."""

from permdec import Inverse, even_zigzag, perm_eval, perm_eval_inv
from permdec import conjugacy as cj
from permdec import cycles as cyc


def main() -> None:
    f = even_zigzag()
    g = Inverse(even_zigzag())  # same cycles, walked the other way
    w = cyc.decider_one_infinite(f)

    h = cj.conjugator_same_partition(f, g, w)
    print("checking f(x) == h^-1(g(h(x))) for x in [0, 40):")
    ok = all(
        perm_eval_inv(h, perm_eval(g, perm_eval(h, x))) == perm_eval(f, x)
        for x in range(40))
    print("  all agree:", ok)

    print("\nfirst few values of the conjugator h:")
    for x in range(0, 12, 2):
        print(f"  h({x}) = {perm_eval(h, x)}")


if __name__ == "__main__":
    main()
