"""End-to-end run of all ten methods on a reduced Shapes-ADD config (a few minutes on one core).

    python demos/small_pipeline.py [out_dir]
"""

import json
import logging
import sys
from pathlib import Path

from acem.discovery import DiscoveryConfig
from acem.pipeline import DatasetSpec, ExperimentConfig, InterventionSpec, TrainSpec, run_pipeline

logging.basicConfig(level=logging.INFO, format="%(message)s")
for name in ("acem.models", "acem.discovery", "acem.concept_space"):
    logging.getLogger(name).setLevel(logging.WARNING)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_run")
cfg = ExperimentConfig(
    dataset=DatasetSpec(n_train=5000, n_val=200, n_test=500),
    discovery=DiscoveryConfig(max_images=30),
    train=TrainSpec(epochs=2),
    seeds=[0],
    intervention=InterventionSpec(n=500),
    output_dir=str(out),
).validate()
manifest = run_pipeline(cfg)
for method, path in manifest.reports.items():
    r = json.loads(Path(path).read_text())
    iv = r["extra"]["intervention"][0]
    gain = "" if iv is None else f"  noisy {iv['accuracy']:.3f} -> {iv['intervened_accuracy']:.3f}"
    print(f"{method:14s} accuracy {r['task_accuracy'][0]:.4f}  cas {r['cas'][0]:.3f}{gain}")
print(f"scatter: {out / 'scatter.svg'}; montages: {sorted(manifest.montages)}")
