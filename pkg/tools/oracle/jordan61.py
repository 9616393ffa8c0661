"""Characteristic-zero block counts, read off at p = 61 (larger than every Jordan block)."""
import sys

from jordan import class_data

for name in sys.argv[1:]:
    g, rs, obs, rows = class_data(name, primes=[61], samples=3)
    for r in rows:
        print(r["label"], r["dim"], r["p"], r["blocksV"], r["blocksW"], int(r["order_p"]),
              int(r["reliable"]), g.dimW - r["dim"], flush=True)
