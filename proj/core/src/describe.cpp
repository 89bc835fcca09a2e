#include "axb/describe.hpp"

#include <algorithm>

#include "axb/errors.hpp"

namespace axb {

namespace {

const char* const kPlumbing = "artifact plumbing";

}  // namespace

const std::vector<OperationInfo>& operation_registry() {
  static const std::vector<OperationInfo> ops = {
      {"multiply", "group_core", "(a1,b1)(a2,b2) = (a1 a2, a1 b2 + b1)", "group law"},
      {"inverse", "group_core", "(a,b)^{-1} = (1/a, -b/a)", kPlumbing},
      {"exp_map", "group_core", "exp(x1 X1 + x2 X2) = (e^{x1}, x2 (e^{x1}-1)/x1)", "one-parameter subgroups"},
      {"log_map", "group_core", "inverse of exp_map", kPlumbing},
      {"factor", "group_core", "g = exp(ln a X1) exp((b/a) X2)", "canonical factorization"},
      {"haar_weight", "group_core", "left density a^-2, right density a^-1", "Haar measures"},
      {"xp_norm", "halfline_space", "||f(x) x^{-1/p}||_p on the log grid", "weighted L^p on the half-line"},
      {"inner", "halfline_space", "int f1 conj(f2) dx/x", "Hilbert structure"},
      {"act", "halfline_space", "U(a,b) f(x) = e^{ibx} f(ax)", "unitary representation"},
      {"generator", "halfline_space", "D1 = x d/dx, D2 = multiplication by ix", "infinitesimal generators"},
      {"sobolev_norm", "halfline_space", "||f|| + sum over words of ||D_w f||", "Sobolev spaces of words"},
      {"macdonald_kernel", "spectral_engine", "K_{i tau}(x) by truncated trapezoid quadrature", kPlumbing},
      {"kl_forward", "spectral_engine", "kernel transform onto the tau grid", kPlumbing},
      {"kl_inverse", "spectral_engine", "inverse kernel transform with weight tau sinh(pi tau)", kPlumbing},
      {"build_matrix_laplacian", "spectral_engine", "dense -(x d/dx)^2 + x^2 and its eigensystem",
       "Laplace operator"},
      {"apply_multiplier", "spectral_engine", "F(Delta) f on the kernel or matrix backend", "functional calculus"},
      {"spectral_measure", "spectral_engine", "eigenvalues with weights |<f, v_k>|^2", kPlumbing},
      {"steklov", "smoothing_ops", "P_r(s) = P_{1,r}(s) P_{2,r}(s)", "Steklov averages"},
      {"m_operator", "smoothing_ops", "sum_k (-1)^k C(r,k) T_j(k t) f", "binomial differences"},
      {"hardy_steklov", "smoothing_ops", "H_r(s) = H_{1,r}(s) H_{2,r}(s), averages of M_{j,r}",
       "Hardy-Steklov averages"},
      {"commutation_check", "smoothing_ops", "A_2^m T_1 T_2 f against e^{-m t1} T_1 T_2 A_2^m f",
       "dilation-translation commutation"},
      {"modulus_mixed", "moduli_besov", "sum over words of sup norms of difference products",
       "mixed modulus of continuity"},
      {"verify_modulus_inequalities", "moduli_besov", "empirical constants of the three modulus inequalities",
       "modulus inequalities"},
      {"k_upper", "moduli_besov", "K-functional upper witness through the Hardy-Steklov split",
       "K-functional, upper side"},
      {"k_lower", "moduli_besov", "K-functional lower witness, the mixed modulus", "K-functional, lower side"},
      {"k_spectral", "moduli_besov", "Hilbert-space K-functional from the spectral measure", "Hilbert-space K-functional"},
      {"besov_norm", "moduli_besov", "K-functional or modulus Besov norm on dyadic scales",
       "Besov spaces"},
      {"besov_norm_fractional", "moduli_besov", "Sobolev part plus first modulus of top derivatives",
       "fractional smoothness"},
      {"zygmund_norm", "moduli_besov", "Sobolev part plus second modulus weighted by 1/s", "Zygmund class"},
      {"reiteration_check", "moduli_besov", "interpolation between E^{k1}, E^{k2} against the Besov norm",
       "reiteration"},
      {"pw_project", "paley_wiener", "spectral projection onto sqrt(lambda) <= omega",
       "Paley-Wiener spaces"},
      {"best_approx", "paley_wiener", "distance to the band-limited subspace", "best approximation"},
      {"bernstein_check", "paley_wiener", "||Delta^{s/2} f|| / (omega^s ||f||)", "Bernstein inequality"},
      {"riesz_boas", "paley_wiener", "truncated series for i sqrt(Delta) f", "Riesz-Boas interpolation"},
      {"schrodinger_modulus", "paley_wiener", "sup of ||(e^{i tau Delta} - I)^r f|| over tau <= t", "Schrodinger group modulus"},
      {"jackson_check", "paley_wiener", "E(sigma, f) against the modulus at 1/sigma", "Jackson inequality"},
      {"partition_values", "frames_lp", "Q_0..Q_J of the dyadic partition", "dyadic partition of unity"},
      {"lp_decompose", "frames_lp", "band functions F_j(Delta) f", "Littlewood-Paley decomposition"},
      {"build_band_frame", "frames_lp", "eigenvector frame of one band with bounds and dual", "band frames"},
      {"frame_analysis", "frames_lp", "coefficients <F_j f, Phi^j_k>", "frame coefficients"},
      {"frame_synthesis", "frames_lp", "sum of coefficients times F_j Psi^j_k", "frame reconstruction"},
      {"besov_norm_bands", "frames_lp", "approximation, projection and frame Besov norms",
       "Besov norm equivalences"},
      {"approx_space_norm", "frames_lp", "approximation-space norm from best approximations", "approximation spaces"},
      {"direct_inverse_check", "frames_lp", "Jackson and Bernstein hypotheses with embedding constants",
       "direct and inverse theorems"},
      {"lp_norm_2d", "halfplane_reps", "weighted tensor trapezoid norm, left or right measure",
       "invariant measures on the half-plane"},
      {"act_2d", "halfplane_reps", "left f(ax, ay+b) or right f(xa, xb+y)", "regular representations"},
      {"generator_2d", "halfplane_reps", "finite-difference generators of both regular representations",
       "half-plane generators"},
      {"modulus_mixed_2d", "halfplane_reps", "mixed modulus through the shared interface",
       "half-plane modulus"},
      {"laplacian_2d", "halfplane_reps", "sum of D_j^* D_j with its eigensystem", "half-plane Laplacian"},
      {"sobolev_graph_check", "halfplane_reps", "Sobolev norm against the graph norm of Delta", "Laplacian domain"},
      {"run_suite", "report_cli", "runs acceptance suites and writes reports", kPlumbing},
      {"list_corpus", "report_cli", "enumerates corpus families and default members", kPlumbing},
      {"describe", "report_cli", "prints this metadata", kPlumbing},
  };
  return ops;
}

std::vector<std::string> operation_names() {
  std::vector<std::string> out;
  for (const auto& op : operation_registry()) out.push_back(op.name);
  return out;
}

std::string describe(const std::string& name) {
  const auto& ops = operation_registry();
  const auto it = std::find_if(ops.begin(), ops.end(), [&](const OperationInfo& o) { return o.name == name; });
  if (it == ops.end()) throw UnknownName("unknown operation '" + name + "'");
  return it->name + " [" + it->module + "]\n  " + it->summary + "\n  topic: " + it->topic + "\n";
}

}  // namespace axb
