#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsp/partitions.hpp"
#include "gsp/root_data.hpp"

namespace gsp {

// Families a_{I'} on Dcal(I') and c_{I'} on Par_ord(I'), integer valued.
struct SignSystem {
  std::string name;
  std::function<long long(Mask Ip, Mask J, Mask K)> a;
  std::function<long long(Mask Ip, const OrderedPartition& P)> c;
};

// (1) trivial, (2) c = eps', (3) a = eps(J,K), c = eps, (4) a = eps(J,K), c = eps eps'
SignSystem sign_system(int which);
SignSystem product(const SignSystem& x, const SignSystem& y);
// ab_{I'}(J,K) = a_{I' cap I+}(J cap I+, K cap I+) b_{I' cap I-}(...), same for cd
SignSystem split_system(const SignSystem& x, const SignSystem& y, Mask Iplus, Mask Iminus);
// c_{I'}(P) = a_{I'}(J,K) c_J(P cap J) c_K(P cap K) for every I' inside I, every
// P in Par_ord(I') and every prefix union J
bool validate_multiplicativity(const SignSystem& s, Mask I);

Sides check_prop_A1(const SignSystem& C, const SignSystem& D, const std::vector<Q>& lambda,
                    Mask Iplus);
Q cor_A2_sum(const std::vector<Q>& lambda);
Q cor_A2_closed_form(const std::vector<Q>& lambda);
Sides check_prop_A3(const std::vector<Q>& lambda);
// lambda has length n + 2m, Iplus is a subset of {1..n}
Sides check_cor_A4(int n, int m, const std::vector<Q>& lambda, Mask Iplus);

// y_mu with y_1 = <mu, varpi_1> and y_i = <mu, varpi_i> - <mu, varpi_{i-1}>, i <= len.
// mu is given by its real coefficients on c, e_1..e_n
std::vector<Q> y_mu(const Q& c_coeff, const std::vector<Q>& e_coeffs, int len);
// herb_c on y_mu against the signed sum over Par_ord(r,t) restricted to mu >_P 0;
// mu lives on GSp_{2(r+2t+m)}
Sides verify_prop331_core(int r, int t, const Q& c_coeff, const std::vector<Q>& e_coeffs, Mask Iplus);
Sides verify_prop331_core(int r, int t, const Weight& mu, Mask Iplus);

// mu over {1..r} split by Iplus, nu of length t
Q herb_c(const std::vector<Q>& mu, Mask Iplus, const std::vector<Q>& nu);

// delta(lambda); nullopt stands for -infinity
std::optional<Q> delta(const std::vector<Q>& lambda);
int N_of(const std::vector<Q>& lambda);  // error when delta is -infinity
// lexicographically least J with s_J/|J| = delta and |J| = N
Mask least_delta_subset(const std::vector<Q>& lambda);
bool has_positive_bipartition(const std::vector<Q>& lambda);

struct RotationResult {
  int k = 0;       // in {1..n}
  long long count = 0;  // |S(lambda)|
  bool remark_conditions = false;  // (a) and (b) hold for k and for no other index
  bool rotation_positive = false;   // tau^k(lambda) > 0
  bool unique_mod_n = false;        // only meaningful without a positive bipartition
};
RotationResult rotation_lemma(const std::vector<Q>& lambda);

struct DeltaReduction {
  std::vector<Q> lambda_prime, mu, nu;
  Mask J = 0;
  bool i_ok = false, ii_ord_ok = false, ii_unord_ok = false, iii_ok = false, iv_ord_ok = false,
       iv_unord_ok = false, strict_decrease = false;
  bool all() const {
    return i_ok && ii_ord_ok && ii_unord_ok && iii_ok && iv_ord_ok && iv_unord_ok && strict_decrease;
  }
};
DeltaReduction delta_reduction(const std::vector<Q>& lambda, Mask J);

// bloc of center `center` (index into Q.blocks)
bool is_bloc(const std::vector<Mask>& Qblocks, int center, const ScaledVector& lam);

struct BlockDecomposition {
  std::vector<std::vector<Mask>> blocks;
  std::vector<bool> positive;
};
// all decompositions P = Q_1..Q_k with P.blocks[centers[l]] a center of Q_l
std::vector<BlockDecomposition> block_decompositions(const OrderedPartition& P,
                                                     const std::vector<int>& centers,
                                                     const std::vector<Q>& lambda);
// rotation indices s (0-based) with (I_s..I_r, I_1..I_{s-1}) in Par_ord(lambda)
std::vector<int> positive_rotations(const OrderedPartition& P, const std::vector<Q>& lambda);

struct BlockReport {
  bool swap_ok = true;        // (ii)
  bool unique_decomp = true;  // (iii)
  bool end_signs = true;      // (iii) Q_1 positive, Q_k negative
  bool unique_rotation = true;  // (iv)
  long long cases = 0;
};
// checks (ii) over all P in Par_ord(lambda) and all decompositions; (iii) and (iv)
// over all center choices when sum > 0 and N(lambda) = n
BlockReport block_ops(const std::vector<Q>& lambda);

struct ParityReport {
  std::optional<Sides> gsp_pair;        // LCI_GSp_pair
  std::optional<Sides> gsp_pair_weak;   // its remark, direct weak sums
  std::optional<Sides> gsp_pair_eta;    // weak lhs against the eta-perturbed strict lhs
  std::optional<Q> sous_pair;           // must be 0
  std::vector<Q> sous_impair;           // k >= 1, each must be 0
  std::string skipped;                  // reason when the hypotheses fail
  bool ok() const;
};
ParityReport check_parity_lemmas(const std::vector<Q>& lambda);
Q sous_sous_sum(int n);  // n >= 3 odd
bool eps_prime_constant_on_par_k(int n);

// LCI_GSp_pair sums; weak selects the >= 0 conventions
Q gsp_pair_lhs(const std::vector<Q>& lambda, bool weak);
Q gsp_pair_rhs(const std::vector<Q>& lambda, bool weak);
Q eta_for(const std::vector<Q>& lambda);
Q par_k_sum(const std::vector<Q>& lambda, int k);

}  // namespace gsp
