"""Per-word location mixtures and the weighted Fisher-vector encoding.

Run from the repo root:  python3 demos/03_location_fisher_vectors.py
"""

import numpy as np

from stanncr.bovw import collect_word_locations, encode_sample, merge_word_locations, train_codebook
from stanncr.featurestore import make_location_discriminative_spec, synth_generate
from stanncr.stdv import (
    RAW_NORMALIZATION,
    compute_stdv,
    fisher_vector_weighted,
    fit_location_gmms,
    responsibilities,
)

spec = make_location_discriminative_spec(samples_per_class=12, features_per_sample=80)
dataset = synth_generate(spec, seed=11)

descriptors = np.concatenate([s.descriptors for s in dataset.samples])
codebook = train_codebook(descriptors, k_words=16, seed=0)
collections = [
    collect_word_locations(s, encode_sample(codebook, s, k_nn=5, smoothing=4.0))
    for s in dataset.samples
]
merged = merge_word_locations(collections, codebook.k_words)

bank = fit_location_gmms(merged, codebook.k_words, n_components=3, seed=5)
print(f"fitted {bank.k_words} word mixtures with G={bank.n_components}; "
      f"{len(bank.fallback_words)} sparse words use the shared fallback")

gmm = bank.gmms[0]
print(f"word 0 priors: {np.round(gmm.priors, 3).tolist()}")
gamma = responsibilities(gmm, gmm.means[0])
print(f"posterior at component-0 mean: {np.round(gamma, 4).tolist()} (sums to {gamma.sum():.6f})")

# The score identity: the Fisher vector of the exact data a mixture was
# fitted on is (numerically) zero.
wls = merged[0]
fv_selfdata = fisher_vector_weighted(gmm, wls.locations, wls.weights)
print(f"Fisher block of the fitting data itself: |x_0| = {np.linalg.norm(fv_selfdata):.2e}")

# Encoding an individual sample deviates from the corpus-level fit, and the
# deviations are what discriminate classes.
z_raw = compute_stdv(bank, collections[0], RAW_NORMALIZATION)
z_norm = compute_stdv(bank, collections[0])  # default: signed sqrt + global L2
print(f"sample 0 vector length {z_raw.values.size} "
      f"(= {bank.k_words} words x {bank.n_components} components x 6)")
print(f"raw norm {np.linalg.norm(z_raw.values):.3f}; "
      f"power+L2 normalized norm {np.linalg.norm(z_norm.values):.3f}")

# Scale invariance: rescaling all weights in a set leaves the block unchanged.
scaled = fisher_vector_weighted(gmm, wls.locations, 7.0 * wls.weights)
print(f"weight-rescaling changes the block by {np.abs(scaled - fv_selfdata).max():.2e}")
