#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxcyc/element_set.hpp"
#include "maxcyc/group.hpp"
#include "maxcyc/permutation.hpp"

namespace maxcyc {

struct SubCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = true;
};

// Outcome of one verifier on one instance; passed iff every sub-check passed.
struct VerifyReport {
  std::string suite;
  std::string instance;
  bool passed = true;
  std::vector<SubCheck> details;

  void add(std::string name, std::string expected, std::string actual, bool ok);
  void require(std::string name, bool ok);
  void expect_eq(std::string name, std::uint64_t expected, std::uint64_t actual);
  void note(std::string name, std::string value);  // informational, always passes
  void merge(const VerifyReport& other, const std::string& prefix = {});
};

struct QuotWitnesses {
  std::optional<Permutation> cond_a;       // element of N outside G^-
  std::optional<Permutation> cond_b;       // coset representative breaking (b)
  std::optional<Permutation> cond_c;       // y in xN \ G^- not conjugate to a generator of <x>
  std::optional<Permutation> coset_union;  // element of a coset meeting G^- partially
};

struct QuotCheckReport {
  std::size_t eta_G = 0;
  std::size_t eta_Q = 0;
  bool equal = false;
  bool cond_a = false;  // N is contained in G^-
  bool cond_b = false;  // (G/N)^- = {gN : gN within G^-}
  bool cond_c = false;  // elements of xN \ G^- conjugate to generators of <x>
  bool gminus_coset_union = false;
  bool all_cosets_conjugate = false;  // every element of xN, for x outside G^-
  std::optional<bool> pgroup_union;   // set when G is a p-group and equal holds
  std::optional<bool> product_absorbs;  // G^- N == G^-, when equal and union hold
  std::optional<bool> image_matches;    // (G/N)^- == G^- N / N, idem
  QuotWitnesses witnesses;

  // Every implication of the characterization holds on this pair.
  bool consistent() const;
};

enum class PrimeOrderKind { ExponentP, FrobeniusPQ, AlternatingFive, NotAllPrimeOrder };

struct PrimeOrderClass {
  PrimeOrderKind kind = PrimeOrderKind::NotAllPrimeOrder;
  std::uint64_t p = 0;  // ExponentP: the prime; FrobeniusPQ: kernel prime
  std::uint64_t q = 0;  // FrobeniusPQ: complement order
};

std::string to_string(const PrimeOrderClass& c);

struct GKGraph {
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  std::size_t components() const;
};

struct XSubgroup {
  Group subgroup;
  ElementSet members;  // element ids in the input group
  std::size_t eta_group = 0;
  std::size_t eta_quotient = 0;
  std::size_t qualifying = 0;  // normal M with eta(G/M) == eta(G)
  bool cyclic = false;
};

// eta(G/N) for a normal subgroup given by its element set. G/{1} is G itself.
std::size_t quotient_eta(const Group& g, const ElementSet& n);
// Order of xN in G/N.
std::uint64_t coset_order(const Group& g, ElemId x, const ElementSet& n);
// The prime p when |G| = p^k with k >= 1, otherwise 0.
std::uint64_t p_group_prime(const Group& g);

QuotCheckReport check_quot_conditions(const Group& g, const Group& n);
XSubgroup compute_X(const Group& g);
PrimeOrderClass classify_prime_order_group(const Group& g);
GKGraph gk_graph(const Group& g);

VerifyReport check_first_main(const Group& g);
VerifyReport check_gminus_containment(const Group& g, const Group& n);
VerifyReport check_gminus_subgroup_lemma(const Group& g);
VerifyReport check_pgrp_lemma(const Group& g);
VerifyReport check_gk_graph(const Group& g);
VerifyReport check_dirproduct_laws(const Group& h, const Group& k);
VerifyReport check_frobenius_eta(const Group& g, const Group& n, const Group& h);
VerifyReport check_centre_bounds(const Group& g, const Group& n);
VerifyReport check_derived_criterion(const Group& g, const Group& n);
VerifyReport check_exp_bound(const Group& g);
VerifyReport check_eitheror(const Group& g, const Group& n, const Group& m);
VerifyReport check_l_relation(const Group& g);
VerifyReport check_quotient_join(const Group& g, const Group& n, const Group& m);

// eta(G/NM) without the p-group hypothesis, for counterexamples.
std::size_t join_quotient_eta(const Group& g, const Group& n, const Group& m);
// Frobenius structure G = NH with N normal, N and H meeting trivially and
// H meeting each conjugate H^g (g outside H) trivially.
bool is_frobenius_pair(const Group& g, const Group& n, const Group& h);

}  // namespace maxcyc
