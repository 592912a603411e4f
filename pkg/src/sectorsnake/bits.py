"""Bit-string conventions shared by every module.

A state is a plain Python int in [0, 2**n).  Element i (1-based) is selected
iff bit (i-1) is set.  The printed form puts element n leftmost and element 1
rightmost, so the printed string is the ordinary binary representation.
"""

from __future__ import annotations


def weight(x: int) -> int:
    """Hamming weight (number of selected elements)."""
    return bin(x).count("1")


def hamming(x: int, y: int) -> int:
    """Hamming distance between two states."""
    return bin(x ^ y).count("1")


def span(x: int) -> int:
    """Difference between largest and smallest selected element; 0 if empty."""
    if x == 0:
        return 0
    return x.bit_length() - 1 - lowest_element_bit(x)


def lowest_element_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def to_string(x: int, n: int) -> str:
    """Printed form: leftmost character is element n, rightmost element 1."""
    if not 0 <= x < (1 << n):
        raise ValueError(f"state {x} out of range for n={n}")
    return format(x, f"0{n}b")


def from_string(bits: str) -> int:
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"not a bit string: {bits!r}")
    return int(bits, 2)


def subset_label(x: int) -> str:
    """Subset notation, e.g. 0b1101 -> '134'; empty set -> '{}'."""
    if x == 0:
        return "{}"
    return "".join(str(i + 1) for i in range(x.bit_length()) if (x >> i) & 1)


def elements(x: int) -> tuple[int, ...]:
    """Selected elements of x as 1-based indices, ascending."""
    return tuple(i + 1 for i in range(x.bit_length()) if (x >> i) & 1)
