"""Segment a few Shapes-ADD images and discover concept candidates for one class.

    python demos/segment_and_discover.py [out_dir]
"""

import sys
from pathlib import Path

import numpy as np

from acem.datasets import generate_shapes_add
from acem.discovery import DiscoveryConfig, discover_class_concepts
from acem.embedder import build_pt_act
from acem.segmentation import segment_multires, write_pgm

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(parents=True, exist_ok=True)

ds = generate_shapes_add(600, seed=0)
image = ds.images[0, 0]
for mask in segment_multires(image, image_id=0):
    write_pgm(out / f"segments_{mask.resolution_level}.pgm", mask.label_map)
    print(f"{mask.resolution_level:6s} {mask.n_segments:2d} segments, sizes {mask.sizes().tolist()}")

label = 7
idx = ds.class_indices(label)
space = build_pt_act()
cands = discover_class_concepts(ds.images[idx], idx, label, space, DiscoveryConfig(max_images=30),
                                fill_value=float(ds.images.mean()))
print(f"class {label}: {len(idx)} images, {len(cands)} candidate concepts")
for c in cands:
    print(f"  {len(c.member_embeddings):4d} members from {len(c.support_images):3d} images, radius {c.radius:.3f}")
