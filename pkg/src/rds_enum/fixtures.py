"""Reference coefficient triangle d_r(C_n, i) for 1 <= n <= 23.

Each line is ``n | d(n,1) d(n,2) ... d(n,n)`` with zeros written out.
"""
from __future__ import annotations

_RAW = """
 1 | 1
 2 | 0 1
 3 | 3 0 1
 4 | 0 4 0 1
 5 | 0 0 5 0 1
 6 | 0 3 0 6 0 1
 7 | 0 0 7 0 7 0 1
 8 | 0 0 0 12 0 8 0 1
 9 | 0 0 3 0 18 0 9 0 1
10 | 0 0 0 10 0 25 0 10 0 1
11 | 0 0 0 0 22 0 33 0 11 0 1
12 | 0 0 0 3 0 40 0 42 0 12 0 1
13 | 0 0 0 0 13 0 65 0 52 0 13 0 1
14 | 0 0 0 0 0 35 0 98 0 63 0 14 0 1
15 | 0 0 0 0 3 0 75 0 140 0 75 0 15 0 1
16 | 0 0 0 0 0 16 0 140 0 192 0 88 0 16 0 1
17 | 0 0 0 0 0 0 51 0 238 0 255 0 102 0 17 0 1
18 | 0 0 0 0 0 3 0 126 0 378 0 330 0 117 0 18 0 1
19 | 0 0 0 0 0 0 19 0 266 0 570 0 418 0 133 0 19 0 1
20 | 0 0 0 0 0 0 0 70 0 504 0 825 0 520 0 150 0 20 0 1
21 | 0 0 0 0 0 0 3 0 196 0 882 0 1155 0 637 0 168 0 21 0 1
22 | 0 0 0 0 0 0 0 22 0 462 0 1452 0 1573 0 770 0 187 0 22 0 1
23 | 0 0 0 0 0 0 0 0 92 0 966 0 2277 0 2093 0 920 0 207 0 23 0 1
"""


def _parse(raw: str) -> dict[tuple[int, int], int]:
    table: dict[tuple[int, int], int] = {}
    for line in raw.strip().splitlines():
        head, _, tail = line.partition("|")
        n = int(head)
        values = [int(v) for v in tail.split()]
        if len(values) != n:
            raise ValueError(f"row {n} has {len(values)} entries")
        for i, value in enumerate(values, start=1):
            table[(n, i)] = value
    return table


#: (n, i) -> d_r(C_n, i) for every 1 <= i <= n <= 23, zeros included.
TABLE_1: dict[tuple[int, int], int] = _parse(_RAW)
TABLE_1_MAX_ORDER = 23
