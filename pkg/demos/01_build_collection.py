"""Build the varieties and their line bundle collections, dimension by dimension.

The variety V_n lives in even dimension n. Its fan has 2n + 2 rays arranged
in antipodal pairs, and the collection G_n attached to it consists of bundles
F(c, J) = c(E - H) - sum_{j in J} E_j grouped into blocks that the symmetry
group of the fan permutes internally.
"""

from toric_exc import build_Gn, build_Vn, expected_size, parse_F


def describe(n: int) -> None:
    fan = build_Vn(n)
    collection = build_Gn(n)
    print(f"V_{n}: {fan.nrays} rays, {len(fan.max_cones)} maximal cones")
    print(f"  collection size {collection.size} (expected {expected_size(n)})")
    for index, block in enumerate(collection.blocks):
        labels = []
        for member in block.members:
            c, J = parse_F(member)
            inner = ",".join(str(j) for j in sorted(J))
            labels.append(f"F({c},{{{inner}}})")
        shown = "  ".join(labels[:4])
        if len(labels) > 4:
            shown += f"  ... {len(labels) - 4} more"
        print(f"  block {index} (l = {block.ell}, {len(labels)} members): {shown}")
    print()


if __name__ == "__main__":
    for n in (2, 4, 6, 8):
        describe(n)
