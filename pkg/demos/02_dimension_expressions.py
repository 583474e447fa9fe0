"""
Dimension expressions
---------------------
Check the dimensional homogeneity of index formulas without computing a
single indicator value: parse the formula, evaluate it over a symbol
table of name -> dimension, and read off the resulting power of [P].
"""

from scindex import (
    dimension_of,
    format_dim_expr,
    parse_dim_expr,
    registry_symbols,
)

symbols = registry_symbols()
print("symbol table:")
for name, dim in symbols.items():
    print(f"  {name:>4} : {dim}")

# The column formulas of the reference table, one per indicator.
formulas = ["i*P", "C/P", "X/E", "(eta*i^2*P)^(1/3)", "E^(1/2)"]
print("\nformula dimensions:")
for formula in formulas:
    print(f"  {formula:>20} -> {dimension_of(formula, symbols)}")

# Parsing and printing round-trip the same text.
tree = parse_dim_expr("(eta*i^2*P)^(1/3)")
print("\nparsed tree prints back as:", format_dim_expr(tree))

# A heterogeneous sum is rejected during evaluation.
try:
    dimension_of("i_E + h", symbols)
except Exception as exc:
    print("i_E + h ->", exc)
