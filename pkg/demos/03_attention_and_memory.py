"""How trackers share one feature memory without stepping on each other.

Three things to watch, all printed as small matrices:

  1. a tracker's key picks out the memory cells that look like its target;
  2. its write erases those cells, so the next tracker reads elsewhere;
  3. trackers take turns by previous confidence, and the turn-taking stops
     early once two consecutive confidences fall below 0.5.
"""

import torch

from tba.config import ConvBlock, ModelConfig
from tba.tracker import TrackerArray, TrackerState, reprioritize


def heat(mat, width=6):
    chars = " .:-=+*#%@"
    lo, hi = float(mat.min()), float(mat.max())
    rows = []
    for r in mat:
        cells = []
        for v in r:
            t = 0.0 if hi == lo else (float(v) - lo) / (hi - lo)
            cells.append(chars[min(int(t * (len(chars) - 1)), len(chars) - 1)])
        rows.append(" ".join(cells))
    return "\n".join(rows)


def main():
    torch.manual_seed(3)
    cfg = ModelConfig(
        task="sprites", frame_h=16, frame_w=16, frame_d=1,
        mem_h=4, mem_w=4, mem_s=6, num_trackers=4, num_layers=2,
        state_size=10, patch_h=3, patch_w=3, head_hidden=12,
        feature_blocks=[ConvBlock((3, 3), 6, (4, 4))],
    )
    arr = TrackerArray(cfg)

    # craft a memory with two "objects": distinctive feature bumps at two cells
    memory = 0.05 * torch.randn(1, 4, 4, 6)
    memory[0, 1, 1] += torch.tensor([3.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    memory[0, 2, 3] += torch.tensor([0.0, 3.0, 0.0, 0.0, 0.0, 0.0])
    print("memory channel mean (two bright cells = two objects):")
    print(heat(memory[0].mean(-1)))

    # give tracker states keys that match one object each by rigging the key map
    with torch.no_grad():
        arr.key_map.weight.zero_()
        arr.key_map.bias.zero_()
        arr.key_map.weight[0, 0] = 4.0   # key channel 0 follows state dim 0
        arr.key_map.weight[1, 1] = 4.0   # key channel 1 follows state dim 1
        arr.key_map.bias[-1] = 4.0       # strong, sharp addressing
        # writes erase what was read and add nothing
        arr.write_map.weight.zero_()
        arr.write_map.bias[:6] = 8.0     # erase gate ~1
        arr.write_map.bias[6:] = 0.0     # write vector 0
        # an untrained head sits near conf 0.5; pin it low so the cutoff
        # logic is visible (trained models learn this on their own)
        arr.head[-1].weight[0].zero_()
        arr.head[-1].bias[0] = -3.0
    h = torch.zeros(1, 4, cfg.state_size)
    h[0, 0, 0] = 1.0   # tracker 1 looks for object A
    h[0, 1, 1] = 1.0   # tracker 2 looks for object B
    prev_conf = torch.tensor([[0.9, 0.8, 0.1, 0.05]])
    print(f"\nprevious confidences: {prev_conf[0].tolist()}")
    print(f"update priorities:    {reprioritize(prev_conf)[0].tolist()}")

    state = TrackerState(h=h, conf=prev_conf)
    _, outputs, iterations, trace = arr.step(state, memory, record_trace=True)

    for j in range(len(trace.tracker)):
        if not bool(trace.updated[j][0]):
            break
        i = int(trace.tracker[j][0])
        print(f"\niteration {j + 1}: tracker {i + 1} "
              f"(prev conf {float(trace.conf_prev[j][0]):.2f}, "
              f"new conf {float(trace.conf_new[j][0]):.2f}, "
              f"wrote={bool(trace.wrote[j][0])})")
        print("attention:")
        print(heat(trace.attention[j][0]))
        print("memory channel mean after the write:")
        print(heat(trace.memory[j][0].mean(-1)))

    print(f"\niterations used: {int(iterations[0])} of {cfg.num_trackers} "
          "(the cutoff fired once two low confidences met)")
    print(f"emitted outputs: {outputs.emitted[0].tolist()}")


if __name__ == "__main__":
    main()
