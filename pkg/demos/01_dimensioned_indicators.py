"""
Dimensioned indicators
----------------------
Compute every indicator for a small portfolio and see why carrying the
unit [P] (one publication) around matters: indices that look comparable
as bare numbers may live on different powers of [P].
"""

from scindex import compute_all, euclidean_index, h_index, qty_add, qty_compare

counts = [12, 7, 5, 3, 1, 1, 0]

print("portfolio:", counts)
for name, quantity in compute_all(counts).items():
    print(f"  {name:>4} = {quantity.magnitude:10.4f}   {quantity.dim}")

# h and g share the dimension [P], so they may be compared directly.
h = h_index(counts)
print("\nh compared with itself:", qty_compare(h, h))  # 0, i.e. equal

# The Euclidean length lives on [P^3/2]; adding it to h is meaningless
# and the algebra refuses to do it.
i_e = euclidean_index(counts)
print(f"h = {h}, i_E = {i_e}")
try:
    qty_add(h, i_e)
except Exception as exc:
    print("h + i_E ->", exc)

# Ratios of like-dimensioned quantities are dimensionless and safe.
ratio = i_e / i_e
print("i_E / i_E =", ratio.magnitude, f"({ratio.dim})")
