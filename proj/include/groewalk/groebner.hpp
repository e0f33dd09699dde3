#pragma once

#include <functional>
#include <span>

#include "groewalk/reduction.hpp"

namespace groewalk {

struct GroebnerBasis {
    std::vector<Polynomial> polys;
    MonomialOrder order;
    bool reduced = false;
    bool normed = false;

    const ContextPtr& context() const { return polys.front().context(); }
};

// Observer invoked with every intermediate basis state; used by the walk
// instrumentation to audit basis conversions.
using StateObserver = std::function<void(std::span<const Polynomial>)>;

struct BuchbergerOptions {
    // Skip pairs with coprime leading monomials (their S-polynomial always
    // reduces to zero). The reduced result is flag-independent.
    bool skip_coprime_pairs = true;
    StateObserver on_state;
};

// Buchberger's completion: the output contains the input generators and
// every S-polynomial remainder reduces to zero. Not reduced or normed.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& opts = {});

// Reduces every element against the others until stable, discards zeros,
// norms leading coefficients to 1, and sorts ascending by leading monomial.
// Input must be a Groebner basis w.r.t. its order; the result is the unique
// normed reduced Groebner basis of the same ideal.
GroebnerBasis interreduce(const GroebnerBasis& basis, const StateObserver& on_state = {});

GroebnerBasis reduced_gb(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& buch_opts = {},
                         const StateObserver& on_interreduce_state = {});

// Basis elements whose leading exponent has an all-zero U block.
std::vector<Polynomial> x_leading_elements(std::span<const Polynomial> polys,
                                           const MonomialOrder& order,
                                           const VariableContext& ctx);
std::vector<Polynomial> x_leading_elements(const GroebnerBasis& basis);

// True iff every element with a K[X] leading term lies entirely in K[X].
// Stated on reduced normed bases; throws PreconditionError otherwise.
bool is_ideal_specific_elim_order(const GroebnerBasis& basis);

// G intersected with K[X]; requires is_ideal_specific_elim_order(basis).
std::vector<Polynomial> elimination_basis(const GroebnerBasis& basis);

// Buchberger criterion + reducedness/normedness; used by tests and the walk
// output validation.
bool satisfies_reduced_gb_invariants(const GroebnerBasis& basis);

}  // namespace groewalk
