"""Closed forms, Bernoulli sequences and identity checks for the Kummer, Bessel and Airy zero sets."""

from .airy import (
    airy_bernoulli,
    airy_bernoulli_closed_forms,
    airy_bessel_relation_check,
    airy_mzsv_2n,
    airy_mzv_2n,
    airy_mzv_2n_routes,
    airy_mzv_4n,
    airy_mzv_4n_routes,
    airy_prime_mzv_2n,
    airy_zeta,
    airy_zeta_values,
)
from .bessel import (
    alt_bessel_zeta,
    bessel_bernoulli_half,
    bessel_bernoulli_sequence,
    bessel_mzsv_2n,
    bessel_mzv_2n,
    bessel_mzv_4n,
    bessel_S,
    bessel_S_star,
    bessel_zeta_gen,
    lommel_poly,
)
from .hypergeometric import (
    hyp_bernoulli,
    hyp_mzsv_2n,
    hyp_mzv_2n,
    hyp_mzv_4n,
    hyp_zeta_gen,
    ramanujan_product_coeff,
)
from .identities import gessel_viennot_check, krein_check, lommel_orthogonality_check
from .quantum import energy_product_estimate, estimate_ladder, ground_state_estimate
from .report import BernoulliSequence, IdentityReport

__all__ = [
    "BernoulliSequence",
    "IdentityReport",
    "airy_bernoulli",
    "airy_bernoulli_closed_forms",
    "airy_bessel_relation_check",
    "airy_mzsv_2n",
    "airy_mzv_2n",
    "airy_mzv_2n_routes",
    "airy_mzv_4n",
    "airy_mzv_4n_routes",
    "airy_prime_mzv_2n",
    "airy_zeta",
    "airy_zeta_values",
    "alt_bessel_zeta",
    "bessel_bernoulli_half",
    "bessel_bernoulli_sequence",
    "bessel_mzsv_2n",
    "bessel_mzv_2n",
    "bessel_mzv_4n",
    "bessel_S",
    "bessel_S_star",
    "bessel_zeta_gen",
    "lommel_poly",
    "hyp_bernoulli",
    "hyp_mzsv_2n",
    "hyp_mzv_2n",
    "hyp_mzv_4n",
    "hyp_zeta_gen",
    "ramanujan_product_coeff",
    "gessel_viennot_check",
    "krein_check",
    "lommel_orthogonality_check",
    "energy_product_estimate",
    "estimate_ladder",
    "ground_state_estimate",
]
