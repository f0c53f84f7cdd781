#!/usr/bin/env python3
"""Regenerate the checked-in model fixtures under tests/fixtures.

Weights are seeded pseudo-random 4-digit decimals; the files in the repo are
authoritative and this script only documents how they were produced.
"""
import json
import random
import sys
from pathlib import Path


def dec(x):
    return float(f"{x:.4f}")


def dense(rng, n_in, n_out, activation, scale=1.0):
    return {
        "weights": [[dec(rng.uniform(-scale, scale)) for _ in range(n_out)] for _ in range(n_in)],
        "biases": [dec(rng.uniform(-0.5, 0.5)) for _ in range(n_out)],
        "activation": activation,
    }


def write(path, doc):
    path.write_text(json.dumps(doc, indent=1) + "\n")


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    write(out / "fig1.json", {
        "name": "fig1",
        "inputs": 2,
        "input_bounds": [[0, 1], [0, 1]],
        "layers": [
            {"weights": [[-2, 1], [1, 2]], "biases": [1, 1], "activation": "relu"},
            {"weights": [[2, -1], [-1, -2]], "biases": [2, 2], "activation": "linear"},
        ],
    })

    write(out / "fig1_bias_pert.json", {
        "name": "fig1_bias_pert",
        "inputs": 2,
        "input_bounds": [[0, 1], [0, 1]],
        "layers": [
            {"weights": [[-2, 1], [1, 2]], "biases": [1, 1], "activation": "relu"},
            {"weights": [[2, -1], [-1, -2]], "biases": [3, 2], "activation": "linear"},
        ],
    })

    rng = random.Random(2024)
    write(out / "bitvec_arch1.json", {
        "name": "bitvec_arch1",
        "inputs": 10,
        "input_bounds": [[0, 1]] * 10,
        "layers": [dense(rng, 10, 10, "relu"), dense(rng, 10, 2, "linear")],
    })

    rng = random.Random(7960)
    write(out / "mnist_1_1.json", {
        "name": "mnist_1_1",
        "inputs": 784,
        "input_bounds": [[0, 1]] * 784,
        "layers": [dense(rng, 784, 10, "relu", 0.1), dense(rng, 10, 10, "linear")],
    })

    rng = random.Random(45)
    write(out / "mpc.json", {
        "name": "mpc",
        "inputs": 6,
        "input_bounds": [[-2, 2], [-1.04, 1.04], [-1, 1], [-0.8, 0.8], [-1.04, 1.04], [-0.01, 0.01]],
        "layers": [
            dense(rng, 6, 45, "relu", 0.4),
            dense(rng, 45, 45, "relu", 0.15),
            dense(rng, 45, 45, "relu", 0.15),
            dense(rng, 45, 1, "hardtanh", 0.15),
        ],
        "output_scale": 1.04,
    })


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "fixtures")
