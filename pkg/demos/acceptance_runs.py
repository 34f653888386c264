"""Train and evaluate the cached runs behind the ordering and probe acceptance criteria.

    python demos/acceptance_runs.py desk      # or: small, smoke
"""

import json
import sys
import time
from pathlib import Path

from xflab import experiments as X

scale = sys.argv[1] if len(sys.argv) > 1 else "desk"
root = Path(__file__).resolve().parent.parent / "out" / "acceptance" / scale
t0 = time.time()


def progress(row):
    if row["step"] % 250 == 0:
        print(f"  step {row['step']:>6} total {row['total']:.4f} ({time.time() - t0:.0f}s)", flush=True)


print(json.dumps(X.ordering_experiment(root, X.SCALES[scale], progress), indent=1), flush=True)
print(json.dumps(X.probe_experiment(root, X.SCALES[scale], progress=progress), indent=1))
