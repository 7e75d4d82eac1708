"""Train a concept embedding model briefly and show test-time intervention on noisy inputs.

    python demos/intervene_cem.py
"""

import numpy as np

from acem.datasets import make_splits
from acem.metrics import task_accuracy
from acem.models import TrainConfig, intervene, predict, train

data = make_splits(5, n_train=5000, n_val=500, n_test=500)
model, hist = train("cem", data["train"], TrainConfig(epochs=2, seed=0), data["train"].concept_truth,
                    val=data["val"], val_concepts=data["val"].concept_truth)
print("val accuracy per epoch", [round(a, 4) for a in hist["val_task_accuracy"]])

test = data["test"]
noisy = np.clip(test.images + np.random.default_rng(0).normal(0, 0.3, test.images.shape), 0, 1).astype(np.float32)
k = test.concept_truth.shape[1]
print(f"noisy test accuracy            {task_accuracy(predict(model, noisy)['task_logits'], test.task_labels):.4f}")
for n_fixed in (2, 6, k):
    mask = np.zeros(k, bool)
    mask[np.r_[0:n_fixed // 2, 6:6 + n_fixed // 2]] = True
    logits = intervene(model, noisy, test.concept_truth, mask)
    print(f"with {n_fixed:2d} concepts intervened  {task_accuracy(logits, test.task_labels):.4f}")
