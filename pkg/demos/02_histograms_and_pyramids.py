"""Codebooks, localized soft assignment, pooled histograms, and STP pooling.

Run from the repo root:  python3 demos/02_histograms_and_pyramids.py
"""

import numpy as np

from stanncr.bovw import (
    StpGrid,
    collect_word_locations,
    encode_sample,
    estimate_smoothing,
    pool_histogram,
    stp_pool,
    train_codebook,
)
from stanncr.featurestore import make_location_discriminative_spec, synth_generate

spec = make_location_discriminative_spec(samples_per_class=10, features_per_sample=80)
dataset = synth_generate(spec, seed=3)

descriptors = np.concatenate([s.descriptors for s in dataset.samples])
codebook = train_codebook(descriptors, k_words=16, seed=0)
print(f"codebook: {codebook.k_words} words over {descriptors.shape[0]} descriptors, "
      f"inertia {codebook.inertia:.1f} after {codebook.iterations} iterations")

smoothing = estimate_smoothing(codebook, descriptors)
print(f"auto smoothing = 1 / mean squared NN distance = {smoothing:.2f}")

sample = dataset.samples[0]
assignments = encode_sample(codebook, sample, k_nn=5, smoothing=smoothing)
print(f"feature 0 spreads mass over words {assignments[0].words.tolist()} "
      f"with weights {np.round(assignments[0].weights, 3).tolist()}")

rep = pool_histogram(assignments, codebook.k_words)
print(f"pooled histogram sums to {rep.y.sum():.6f}; top word has mass {rep.y.max():.3f}")

word_sets = collect_word_locations(sample, assignments)
total = sum(s.weights.sum() for s in word_sets.values())
print(f"collected location sets over {len(word_sets)} words; "
      f"total collected weight {total:.3f} == feature count {sample.n_features}")

# The space-time pyramid baseline: (1x1 + 2x2 spatial) x (whole + two halves)
# = 15 cells, each holding an unnormalized word histogram.
grid = StpGrid()
pyramid = stp_pool(sample, assignments, grid, k_words=codebook.k_words)
print(f"STP vector length = {grid.n_cells} cells x {codebook.k_words} words "
      f"= {pyramid.size}")
cells = pyramid.reshape(grid.n_cells, codebook.k_words)
print(f"2x2 cells sum back to the whole-clip cell exactly: "
      f"{np.abs(cells[3:7].sum(axis=0) - cells[0]).max():.2e}")
