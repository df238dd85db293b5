"""Slow definitional reference implementations used to pin expected values.

Everything here works on plain Python sequences and deliberately avoids the
library's algorithms: paperfolding via the recursive even/odd construction,
periods by trial division, repetition scans by string slicing.
"""

from fractions import Fraction


def pf_recursive(bits, n):
    """Paperfolding prefix by the even/odd recursion.

    Even positions alternate c0, 1-c0; the odd-position subsequence is the
    paperfolding word of the remaining instructions.
    """
    if n == 0:
        return []
    if not bits:
        raise ValueError("out of folding instructions")
    evens = [(bits[0] + t) % 2 for t in range((n + 1) // 2)]
    odds = pf_recursive(bits[1:], n // 2)
    out = []
    for i in range(n):
        out.append(evens[i // 2] if i % 2 == 0 else odds[i // 2])
    return out


def smallest_period_trial(seq):
    n = len(seq)
    for p in range(1, n + 1):
        if all(seq[i] == seq[i + p] for i in range(n - p)):
            return p
    raise AssertionError("n is always a period")


def exponent_of(seq):
    return Fraction(len(seq), smallest_period_trial(seq))


def max_exponent_scan(seq):
    n = len(seq)
    best = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n + 1):
            e = exponent_of(seq[i:j])
            if e > best:
                best = e
    return best


def ap_slice(seq, start, diff, count):
    return [seq[start + t * diff] for t in range(count)]


def repetition_reports(seq, threshold, strict=False, min_period=1, odd_only=False,
                       exact_diff=None):
    """Every (diff, start, offset, period, run) hit, in the engine's scan order.

    A hit is a maximal run of trace positions agreeing p steps back whose
    exponent run/p passes the threshold and whose smallest period is p.
    """
    n = len(seq)
    if exact_diff is not None:
        diffs = [exact_diff] if exact_diff <= n - 1 else []
    else:
        diffs = range(1, n, 2 if odd_only else 1)
    out = []
    for j in diffs:
        for start in range(j):
            sub = seq[start::j]
            m = len(sub)
            for offset in range(m):
                for p in range(1, m - offset + 1):
                    run = p
                    while offset + run < m and sub[offset + run] == sub[offset + run - p]:
                        run += 1
                    if p < min_period or smallest_period_trial(sub[offset:offset + run]) != p:
                        continue
                    q = Fraction(run, p)
                    if (q > threshold) if strict else (q >= threshold):
                        out.append((j, start, offset, p, run))
                        break
                else:
                    continue
                break
    return out


def first_report(seq, threshold, strict=False, min_period=1, odd_only=False,
                 exact_diff=None):
    hits = repetition_reports(seq, threshold, strict, min_period, odd_only, exact_diff)
    return hits[0] if hits else None


def subwords(seq, n):
    return {tuple(seq[i:i + n]) for i in range(len(seq) - n + 1)}


def square_periods_scan(seq, max_period):
    found = set()
    n = len(seq)
    for p in range(1, max_period + 1):
        for i in range(n - 2 * p + 1):
            if seq[i:i + p] == seq[i + p:i + 2 * p]:
                found.add(p)
                break
    return found


def grid_lines(rows, cols, max_direction):
    """All maximal in-bounds segments, direction-major then row-major."""
    dirs = [(0, 1)] + [(dr, dc)
                       for dr in range(1, max_direction + 1)
                       for dc in range(-max_direction, max_direction + 1)
                       if __import__("math").gcd(dr, abs(dc)) == 1]
    lines = []
    for (dr, dc) in dirs:
        for r in range(rows):
            for c in range(cols):
                pr, pc = r - dr, c - dc
                if 0 <= pr < rows and 0 <= pc < cols:
                    continue
                count = 0
                rr, cc = r, c
                while 0 <= rr < rows and 0 <= cc < cols:
                    count += 1
                    rr += dr
                    cc += dc
                if count >= 2:
                    lines.append((r, c, dr, dc, count))
    return lines
