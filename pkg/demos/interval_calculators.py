"""Interval calculators: which values can sit next to a given entry, which
types a family supports, and where symmetric middles can move.

All of this is exact integer arithmetic; nothing here samples a module.

Run: python3 demos/interval_calculators.py
"""

from levellab import (
    HVector,
    gorenstein_middle_interval,
    gorenstein_socle4_interval,
    level_quotient_floor,
    level_quotient_floor_ceil,
    max_prefix_type_range,
    max_prefix_vector,
    socle2_min_codim,
    socle2_type_range,
    socle3_interval,
    type_interval,
    type_reduction_applies,
)


def main() -> None:
    # Socle degree 2: a type t needs enough variables, and conversely every
    # type up to the quadric count occurs.
    print(f"type 25 in socle degree 2 needs at least {socle2_min_codim(25)} variables")
    print(f"with 7 variables the socle degree 2 types are {socle2_type_range(7)}")

    # Socle degree 3: once one value of the middle entry is attained, the
    # whole interval up to the caps is attained.
    print(f"\nsocle 3, 40 variables, type 45, middle 35 attained: "
          f"middle fills {socle3_interval(40, 35, 45)}")
    print(f"socle 3, 5 variables, type 6, middle 6 attained: "
          f"middle fills {socle3_interval(5, 6, 6)}")

    # Maximal-prefix vectors: every entry below the socle is as large as the
    # ring allows; the admissible types then form one interval.
    print(f"\n2 variables, socle degree 3: types {max_prefix_type_range(2, 3)}")
    for t in max_prefix_type_range(2, 3):
        print(f"  type {t}: h = ({max_prefix_vector(2, 3, t)})")

    # When the type is large enough relative to the other entries, it can be
    # lowered one step at a time without leaving the level region.
    tall = HVector.parse("1,60,55,50,55,70")
    print(f"\n({tall}): reduction applies: {type_reduction_applies(tall)}, "
          f"types fill {type_interval(tall)}")

    # Symmetric type 1 vectors with a maximal prefix: the middle entry moves
    # freely between the attained value and the ring cap.
    for text in ("1,3,3,3,1", "1,40,30,40,1"):
        h = HVector.parse(text)
        print(f"({h}): middle fills {gorenstein_middle_interval(h)}")
    print(f"socle 4, 24 variables, middle 20 attained: "
          f"{gorenstein_socle4_interval(24, 20)}")

    # Quotient floors: a generic type c quotient of a type t module cannot
    # drop below a weighted mix of h and its reverse.  The exact rational
    # floor rounds up because dimensions are integers.
    h = HVector.parse("1,3,6,9,3")
    print(f"\n({h}) generic quotient floors:")
    for c in (1, 2):
        exact = [str(f) if f.denominator > 1 else str(f.numerator)
                 for f in level_quotient_floor(h, c)]
        print(f"  type {c}: at least {level_quotient_floor_ceil(h, c)} "
              f"(exact {', '.join(exact)})")


if __name__ == "__main__":
    main()
