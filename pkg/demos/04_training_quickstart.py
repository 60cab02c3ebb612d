"""Micro training run: the full loop at toy scale in about a minute.

Generates a small 32x32 sprite dataset, trains a reduced model for 60 steps
with the reconstruction-plus-tightness loss, and plots the loss curve.  The
point is the mechanics (state carryover, validation cadence, checkpointing,
CSV log), not tracking quality; see the README for the desk-scale recipe.
"""

import csv
import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from tba.config import TrainConfig
from tba.datagen import generate_sprites_mot
from tba.training import train

OUT = "demo_out/training"

# toy-sized architecture: every preset field can be overridden from config
TOY_MODEL = {
    "frame_h": 32, "frame_w": 32,
    "mem_h": 4, "mem_w": 4, "mem_s": 12,
    "state_size": 24, "patch_h": 9, "patch_w": 9, "head_hidden": 64,
    "feature_blocks": [
        {"kernel": [5, 5], "out_channels": 16, "pool_out": [16, 16]},
        {"kernel": [3, 3], "out_channels": 32, "pool_out": [8, 8]},
        {"kernel": [3, 3], "out_channels": 48, "pool_out": [4, 4]},
        {"kernel": [1, 1], "out_channels": 12, "pool_out": None},
    ],
}


def main():
    os.makedirs(OUT, exist_ok=True)
    data = os.path.join(OUT, "data")
    if not os.path.exists(os.path.join(data, "manifest.json")):
        generate_sprites_mot(20 * 40, seed=0, out_dir=data, frame_h=32, frame_w=32,
                             patch_h=9, patch_w=9, spawn_prob=0.12)

    cfg = TrainConfig(task="sprites", ablation="TBAc", model=TOY_MODEL,
                      data_dir=data, out_dir=os.path.join(OUT, "run"), batch_size=4,
                      val_every=20, val_batches=2, patience=10, max_steps=60,
                      learning_rate=2e-3, seed=0)
    summary = train(cfg)
    print(f"steps: {summary['steps']}  parameters: {summary['parameters']:,}")
    print(f"best checkpoint: {summary['best_checkpoint']}")
    print(f"validation history: {[(s, round(v, 4)) for s, v in summary['val_history']]}")

    with open(summary["log"]) as f:
        rows = list(csv.DictReader(f))
    steps = [int(r["step"]) for r in rows]
    train_loss = [float(r["train_loss"]) for r in rows]
    mse = [float(r["mse"]) for r in rows]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(steps, train_loss, label="total loss")
    ax.plot(steps, mse, label="reconstruction mse")
    val = [(int(r["step"]), float(r["val_loss"])) for r in rows if r["val_loss"]]
    if val:
        ax.plot(*zip(*val), "o--", label="validation loss")
    ax.set_xlabel("step")
    ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(OUT, "loss_curve.png")
    fig.savefig(path, dpi=120)
    print(f"loss curve -> {path}")


if __name__ == "__main__":
    main()
