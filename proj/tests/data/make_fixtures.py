#!/usr/bin/env python3
"""Regenerates the bundled PGM fixtures."""
import math
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def gradient_flat(size=128):
    rows = []
    half = size // 2
    for y in range(size):
        row = []
        for x in range(size):
            if y < half:
                # curved ramp with a gentle ripple
                v = 40 + 0.008 * (x - 40) ** 2 + 1.5 * y + 12 * math.sin(x / 5.0) * math.cos(y / 7.0)
                v = max(0, min(255, int(round(v))))
            elif x < half:
                v = 200
            else:
                v = 40
            row.append(v)
        rows.append(row)
    return rows


def write_pgm(path, rows):
    h, w = len(rows), len(rows[0])
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (w, h))
        f.write(bytes(v for row in rows for v in row))


if __name__ == "__main__":
    write_pgm(os.path.join(HERE, "gradient_flat_128.pgm"), gradient_flat())
