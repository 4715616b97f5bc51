"""
Hard instances from 3-Partition
===============================

Each generator turns a multiset into a guest/host pair from a restricted
graph class. A 3-partition of the multiset yields an explicit surjective
homomorphism, and the oracle confirms the absence of one otherwise.
"""

from surjhom.hardness import (
    PARTITION_TAGS,
    check_certificates,
    construct_witness,
    generate,
    three_partition_brute,
    validate_multiset,
)
from surjhom.oracle import find_surjective_hom, verify

yes = validate_multiset([1, 2, 3, 1, 2, 3])
no = validate_multiset([1, 1, 1, 1, 1, 3])
part = three_partition_brute(yes)
print("partition of", yes.a, "->", part.triples)
print("partition of", no.a, "->", three_partition_brute(no))

for tag in PARTITION_TAGS:
    out = generate(tag, yes)
    f = construct_witness(out, part)
    print(f"{tag:16} guest {out.guest.n:4} vertices, host {out.host.n:4} vertices, "
          f"certificates ok: {check_certificates(out)}, witness ok: {verify(out.guest, out.host, f)}")

for tag in ("linear-forest", "union-cliques"):
    out = generate(tag, no)
    print(f"{tag} on the NO instance:", find_surjective_hom(out.guest, out.host).verdict.value)
