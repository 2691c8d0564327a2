"""Weight combinatorics of the two halves of the Weil representation of Sp_2n(p)."""
