"""Reference cells for the two relative-error tables the harness reproduces.

Table 1 tabulates 1 - L5/F, where L5 is the five-term truncated geometric
Struve sum (LB-2.3 with truncation=5); Table 2 tabulates U/F - 1, where U is
the UB-GAU2 bound e^{-beta x} x^nu L_nu(x)/(1-beta).  Values are printed to
4 decimals, hence the harness tolerance of 1.5e-4 per cell.

The fixture is a line-oriented text block so cells stay greppable and
diffable: ``table,nu,beta,x,value``.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["TABLE_NU", "TABLE_BETA", "TABLE_X", "cells", "cell_value"]

TABLE_NU = (1.0, 2.5, 5.0, 10.0)
TABLE_BETA = (0.25, 0.5, 0.75)
TABLE_X = (0.5, 5.0, 10.0, 15.0, 25.0, 50.0, 100.0)

_RAW = """\
# table,nu,beta,x,value -- x columns 0.5,5,10,15,25,50,100 flattened per row
1,1,0.25,0.5,0.2051
1,1,0.25,5,0.1976
1,1,0.25,10,0.1413
1,1,0.25,15,0.1028
1,1,0.25,25,0.0656
1,1,0.25,50,0.0346
1,1,0.25,100,0.0182
1,2.5,0.25,0.5,0.1276
1,2.5,0.25,5,0.1320
1,2.5,0.25,10,0.1092
1,2.5,0.25,15,0.0863
1,2.5,0.25,25,0.0591
1,2.5,0.25,50,0.0329
1,2.5,0.25,100,0.0177
1,5,0.25,0.5,0.0781
1,5,0.25,5,0.0831
1,5,0.25,10,0.0773
1,5,0.25,15,0.0670
1,5,0.25,25,0.0503
1,5,0.25,50,0.0302
1,5,0.25,100,0.0169
1,10,0.25,0.5,0.0439
1,10,0.25,5,0.0465
1,10,0.25,10,0.0468
1,10,0.25,15,0.0444
1,10,0.25,25,0.0378
1,10,0.25,50,0.0257
1,10,0.25,100,0.0155
1,1,0.5,0.5,0.2111
1,1,0.5,5,0.2582
1,1,0.5,10,0.2259
1,1,0.5,15,0.1843
1,1,0.5,25,0.1341
1,1,0.5,50,0.0870
1,1,0.5,100,0.0602
1,2.5,0.5,0.5,0.1304
1,2.5,0.5,5,0.1635
1,2.5,0.5,10,0.1606
1,2.5,0.5,15,0.1426
1,2.5,0.5,25,0.1133
1,2.5,0.5,50,0.0791
1,2.5,0.5,100,0.0570
1,5,0.5,0.5,0.0793
1,5,0.5,5,0.0971
1,5,0.5,10,0.1039
1,5,0.5,15,0.1004
1,5,0.5,25,0.0881
1,5,0.5,50,0.0680
1,5,0.5,100,0.0522
1,10,0.5,0.5,0.0443
1,10,0.5,5,0.0514
1,10,0.5,10,0.0569
1,10,0.5,15,0.0590
1,10,0.5,25,0.0580
1,10,0.5,50,0.0515
1,10,0.5,100,0.0440
1,1,0.75,0.5,0.2171
1,1,0.75,5,0.3359
1,1,0.75,10,0.3723
1,1,0.75,15,0.3659
1,1,0.75,25,0.3369
1,1,0.75,50,0.2953
1,1,0.75,100,0.2683
1,2.5,0.75,0.5,0.1333
1,2.5,0.75,5,0.2036
1,2.5,0.75,10,0.2458
1,2.5,0.75,15,0.2597
1,2.5,0.75,25,0.2640
1,2.5,0.75,50,0.2581
1,2.5,0.75,100,0.2500
1,5,0.75,0.5,0.0805
1,5,0.75,5,0.1142
1,5,0.75,10,0.1446
1,5,0.75,15,0.1635
1,5,0.75,25,0.1850
1,5,0.75,50,0.2084
1,5,0.75,100,0.2226
1,10,0.75,0.5,0.0447
1,10,0.75,5,0.0569
1,10,0.75,10,0.0705
1,10,0.75,15,0.0825
1,10,0.75,25,0.1028
1,10,0.75,50,0.1400
1,10,0.75,100,0.1774
2,1,0.25,0.5,9.4597
2,1,0.25,5,0.3208
2,1,0.25,10,0.0888
2,1,0.25,15,0.0521
2,1,0.25,25,0.0292
2,1,0.25,50,0.0139
2,1,0.25,100,0.0068
2,2.5,0.25,0.5,17.4185
2,2.5,0.25,5,0.9887
2,2.5,0.25,10,0.3593
2,2.5,0.25,15,0.2156
2,2.5,0.25,25,0.1197
2,2.5,0.25,50,0.0565
2,2.5,0.25,100,0.0274
2,5,0.25,0.5,30.7218
2,5,0.25,5,2.1879
2,5,0.25,10,0.8593
2,5,0.25,15,0.5134
2,5,0.25,25,0.2806
2,5,0.25,50,0.1300
2,5,0.25,100,0.0625
2,10,0.25,0.5,57.3655
2,10,0.25,5,4.7301
2,10,0.25,10,1.9918
2,10,0.25,15,1.1901
2,10,0.25,25,0.6378
2,10,0.25,50,0.2868
2,10,0.25,100,0.1351
2,1,0.5,0.5,14.2938
2,1,0.5,5,0.5538
2,1,0.5,10,0.1530
2,1,0.5,15,0.0839
2,1,0.5,25,0.0452
2,1,0.5,50,0.0212
2,1,0.5,100,0.0103
2,2.5,0.5,0.5,26.1923
2,2.5,0.5,5,1.5400
2,2.5,0.5,10,0.5661
2,2.5,0.5,15,0.3363
2,2.5,0.5,25,0.1842
2,2.5,0.5,50,0.0858
2,2.5,0.5,100,0.0414
2,5,0.5,0.5,46.1220
2,5,0.5,5,3.3214
2,5,0.5,10,1.3161
2,5,0.5,15,0.7868
2,5,0.5,25,0.4286
2,5,0.5,50,0.1972
2,5,0.5,100,0.0943
2,10,0.5,0.5,86.0701
2,10,0.5,5,7.1185
2,10,0.5,10,3.0084
2,10,0.5,15,1.8015
2,10,0.5,25,0.9664
2,10,0.5,50,0.4339
2,10,0.5,100,0.2037
2,1,0.75,0.5,28.8028
2,1,0.75,5,1.3243
2,1,0.75,10,0.4124
2,1,0.75,15,0.2137
2,1,0.75,25,0.1021
2,1,0.75,50,0.0444
2,1,0.75,100,0.0210
2,2.5,0.75,0.5,52.5169
2,2.5,0.75,5,3.2293
2,2.5,0.75,10,1.2300
2,2.5,0.75,15,0.7305
2,2.5,0.75,25,0.3933
2,2.5,0.75,50,0.1783
2,2.5,0.75,100,0.0845
2,5,0.75,0.5,92.3236
2,5,0.75,5,6.7374
2,5,0.75,10,2.7112
2,5,0.75,15,1.6308
2,5,0.75,25,0.8892
2,5,0.75,50,0.4056
2,5,0.75,100,0.1918
2,10,0.75,0.5,172.1854
2,10,0.75,5,14.2887
2,10,0.75,10,6.0686
2,10,0.75,15,3.6482
2,10,0.75,25,1.9648
2,10,0.75,50,0.8827
2,10,0.75,100,0.4126
"""


@lru_cache(maxsize=1)
def _parsed() -> dict[tuple[int, float, float, float], float]:
    out: dict[tuple[int, float, float, float], float] = {}
    for line in _RAW.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        which, nu, beta, x, value = line.split(",")
        out[(int(which), float(nu), float(beta), float(x))] = float(value)
    return out


def cells(which: int) -> list[tuple[float, float, float, float]]:
    """All (nu, beta, x, expected) cells of one table, in fixture order."""
    if which not in (1, 2):
        raise ValueError(f"table must be 1 or 2, got {which}")
    return [
        (nu, beta, x, v)
        for (w, nu, beta, x), v in _parsed().items()
        if w == which
    ]


def cell_value(which: int, nu: float, beta: float, x: float) -> float:
    return _parsed()[(which, nu, beta, x)]
