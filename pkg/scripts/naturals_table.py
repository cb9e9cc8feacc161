"""Print the le / covered matrices on the naturals encoding and the descent lengths.

On nat m, nat n the two relations should reduce to m <= n and m < n.
"""

import sys

from dplump.cli import DEFAULT_SIGNATURE
from dplump.listorder import greedy_descend
from dplump.order import covered, le
from dplump.wtree import nat_tree

n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
nats = [nat_tree(DEFAULT_SIGNATURE, k) for k in range(n + 1)]

for name, rel in (("le", le), ("covered", covered)):
    print(f"{name} (row m, column n)")
    print("    " + " ".join(f"{k:>2}" for k in range(n + 1)))
    for m, u in enumerate(nats):
        print(f"{m:>3} " + " ".join(" 1" if rel(u, v) else " ." for v in nats))
    print()

print("descent steps:", [len(greedy_descend(u)) - 1 for u in nats])
