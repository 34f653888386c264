"""Render one transfer case with a checkpoint and save A's motion replayed on scene B.

    python demos/transfer_gallery.py out/smoke/checkpoints/step_0002000.xfck gallery.png
"""

import sys

import numpy as np
from PIL import Image

from xflab import evaluation as E
from xflab.training import load_model


def main(checkpoint, out_png, index=0):
    model, _ = load_model(checkpoint)
    case = E.make_case(int(index), E.EvalConfig(), model.config.image_size, model.config.views_decoder - 1)
    rendered = E.transfer_render(model, case)
    rows = [[case.a.frames[j] for j in case.targets], rendered, case.gt_b_frames]
    grid = np.concatenate([np.concatenate(r, axis=1) for r in rows], axis=0)
    Image.fromarray(np.round(np.clip(grid, 0, 1) * 255).astype(np.uint8)).save(out_png)
    print(f"rows: scene A targets / transferred renders / scene B ground truth -> {out_png}")


if __name__ == "__main__":
    main(*sys.argv[1:])
