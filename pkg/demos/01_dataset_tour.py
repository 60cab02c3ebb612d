"""Tour of the synthetic datasets: generation, layout, ground truth.

Generates a small copy of each task into ./demo_out/datasets, prints what
landed on disk, and saves a contact sheet of frames so you can eyeball the
sprites and the digit overlaps.
"""

import json
import os
from collections import Counter

import numpy as np

from tba.datagen import (
    generate_mnist_mot,
    generate_sprites_mot,
    load_manifest,
    load_sequence_frames,
    read_ground_truth,
    sequence_dirs,
)
from tba.viz import hstack_tiles, save_png

OUT = "demo_out/datasets"


def contact_sheet(seq_dir, path, every=4):
    frames = load_sequence_frames(seq_dir)
    tiles = [frames[t] for t in range(0, frames.shape[0], every)]
    save_png(path, hstack_tiles(list(tiles)))
    print(f"  wrote {path} ({len(tiles)} frames)")


def describe(root):
    manifest = load_manifest(root)
    print(f"  task={manifest['task']} frames/seq={manifest['seq_len']} "
          f"splits={manifest['splits']}")
    boxes = 0
    per_frame = Counter()
    for split in ("train", "val", "test"):
        for seq in sequence_dirs(root, split):
            for rec in read_ground_truth(seq):
                boxes += 1
                per_frame[(seq, rec["frame"])] += 1
    occupancy = np.bincount(list(per_frame.values()))
    print(f"  {boxes} ground-truth boxes; max concurrent = {max(per_frame.values())}")
    print(f"  frames with 1/2/3 objects: {list(occupancy[1:])}")


def main():
    os.makedirs(OUT, exist_ok=True)

    print("== sprites ==")
    sprites_root = os.path.join(OUT, "sprites")
    generate_sprites_mot(20 * 30, seed=7, out_dir=sprites_root, spawn_prob=0.05)
    describe(sprites_root)
    contact_sheet(sequence_dirs(sprites_root, "train")[0],
                  os.path.join(OUT, "sprites_sheet.png"))

    print("== mnist-style digits ==")
    # stand-in digit patches: random blobs in [0, 1]; point digit_source at the
    # real 60k-digit idx file to reproduce the paper's look
    rng = np.random.default_rng(0)
    digits = (rng.random((64, 28, 28)) > 0.75) * rng.uniform(0.4, 1.0, (64, 28, 28))
    digit_path = os.path.join(OUT, "digits.npz")
    np.savez(digit_path, images=digits.astype(np.float32))
    mnist_root = os.path.join(OUT, "mnist")
    generate_mnist_mot(20 * 30, digit_path, seed=7, out_dir=mnist_root,
                       spawn_prob=0.05)
    describe(mnist_root)
    contact_sheet(sequence_dirs(mnist_root, "train")[0],
                  os.path.join(OUT, "mnist_sheet.png"))

    print("\nper-sequence files:")
    seq = sequence_dirs(sprites_root, "train")[0]
    for name in sorted(os.listdir(seq))[:3] + ["...", "gt.csv", "objects.json"]:
        print(f"  {name}")
    print("\nfirst gt.csv lines (frame,id,left,top,w,h,conf,x,y,z):")
    with open(os.path.join(seq, "gt.csv")) as f:
        for line in list(f)[:3]:
            print(f"  {line.strip()}")
    meta = json.load(open(os.path.join(seq, "objects.json")))
    if meta:
        keys = ", ".join(sorted(meta[0]))
        print(f"\nobjects.json fields: {keys}")


if __name__ == "__main__":
    main()
