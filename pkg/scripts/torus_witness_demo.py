"""Carry one Galois-stable triple onto another over the cyclic cubic field.

Both triples are Galois orbits in P^2 over Q(t), t^3 = 3t + 1.  The torus
of the first triple absorbs the difference of the two frame cocycles; the
resulting map is defined over Q and sends the second triple to the first.
"""
from __future__ import annotations

from dp6.cocohom import TorusSubgroup, coboundary_apply, t_coboundary_solve, trivial_cocycle
from dp6.numfield import field_make
from dp6.projlin import ProjPoint, frame_map, general_position_point, vandermonde_points


def main() -> None:
    F = field_make([-1, -3, 0, 1], [[0, 1], [2, 0, -1], [-2, -1, 1]], name="cyclic cubic")
    t = F.gen
    P = list(vandermonde_points(t, t.galois(1), t.galois(2)))
    base = ProjPoint((F.one, t, 2 + t * t))
    P2 = [base.galois(g) for g in F.group]
    triv = trivial_cocycle(F, F.group)
    T = TorusSubgroup(P, F.group)
    # an irrational fourth point, so the frame alone is not defined over Q
    w = ProjPoint((F.one, 1 + t, F.from_rational(3)))
    frame = frame_map(*P, general_position_point(P)).inverse() @ frame_map(*P2, w)
    print("frame defined over Q:", all(frame.galois(g) == frame for g in F.group))
    B = t_coboundary_solve(coboundary_apply(frame, triv), triv, T)
    alpha = B @ frame
    print("P  =", [str(p) for p in P])
    print("P2 =", [str(p) for p in P2])
    print("B (torus element) =", B.to_json())
    print("alpha = B o frame =", alpha.to_json())
    print("alpha(P2) == P:", [alpha(p) for p in P2] == P)
    print("alpha defined over Q:", all(alpha.galois(g) == alpha for g in F.group))


if __name__ == "__main__":
    main()
