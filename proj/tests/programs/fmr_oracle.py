import sys
n = int(sys.argv[2]) if len(sys.argv) > 2 else 100000
m = (n - 1) // 2  # the evens below n are 0, 2, ..., 2m
total = 4 * m * (m + 1) * (2 * m + 1) // 6
open(sys.argv[1], "w").write(f"{total}\n")
