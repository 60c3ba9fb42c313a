#include "z4wb/neighbor.hpp"

#include <stdexcept>
#include <string>

namespace z4wb {

namespace {

void require_extremal(const Z4Code& c, const char* op) {
    if (!c.is_extremal())
        throw std::invalid_argument(std::string(op) + ": code must be extremal Type II");
}

// phi(x) = (<alpha,x> mod 4)/2 is a linear functional on C; return
// ker phi + the glue row.  phi must take an even dot on every generator and
// be surjective (some generator maps to 1).
Z4Code kernel_plus_glue(const Z4Code& c, const Z4Vec& alpha, const Z4Vec& glue) {
    std::vector<Z4Vec> gens = c.generators();
    std::vector<int> e(gens.size());
    int pivot = -1;
    for (size_t i = 0; i < gens.size(); ++i) {
        int d = alpha.dot4(gens[i]);
        if (d & 1) throw std::logic_error("neighbor: functional not well defined on code");
        e[i] = d >> 1;
        if (pivot < 0 && e[i]) pivot = static_cast<int>(i);
    }
    if (pivot < 0) throw std::logic_error("neighbor: functional vanishes on code");
    std::vector<Z4Vec> rows;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        rows.push_back(e[i] ? gens[i] - gens[pivot] : gens[i]);
    }
    if (pivot < c.k1()) rows.push_back(gens[pivot].doubled());
    Z4Code kernel = Z4Code::from_rows(c.length(), rows);
    if (kernel.log2_size() != c.log2_size() - 1)
        throw std::logic_error("neighbor: kernel does not have index 2");
    rows.push_back(glue);
    return Z4Code::from_rows(c.length(), rows);
}

}  // namespace

std::pair<Z4Code, AugmentationWitness> augment_extremal(const Z4Code& c, const BitVec& a) {
    require_extremal(c, "augment");
    int n = c.length();
    if (a.weight() != 4) throw std::invalid_argument("augment: wt(a) must be 4");
    if (c.residue().contains(a))
        throw std::invalid_argument("augment: a must not lie in the residue code");
    if (!c.residue().span_with(a).is_doubly_even())
        throw std::invalid_argument("augment: <residue, a> must be doubly even");

    Z4Vec alpha = Z4Vec::lift(a, n);
    BitVec b;
    bool found = false;
    for (const BitVec& t : c.torsion().basis())
        if (a.dot(t)) { b = t; found = true; break; }
    if (!found) throw std::logic_error("augment: no torsion vector pairs oddly with a");
    Z4Vec beta = Z4Vec::lift(b, n);
    Z4Vec glue = alpha + beta.doubled();

    Z4Code out = kernel_plus_glue(c, alpha, glue);
    if (out.log2_size() != c.log2_size())
        throw std::logic_error("augment: output size mismatch");
    if (out.residue() != c.residue().span_with(a))
        throw std::logic_error("augment: residue span identity failed");
    if (!out.is_extremal()) throw std::logic_error("augment: output is not extremal Type II");
    return {out, AugmentationWitness{a, alpha, b, beta, glue}};
}

std::pair<Z4Code, DeaugmentationWitness> deaugment_extremal(const Z4Code& c, const BitVec& a) {
    require_extremal(c, "deaugment");
    int n = c.length();
    if (a.weight() != 4) throw std::invalid_argument("deaugment: wt(a) must be 4");
    auto coeffs = c.residue().coefficients(a);
    if (!coeffs) throw std::invalid_argument("deaugment: a must lie in the residue code");

    // A codeword with residue a: its odd entries sit exactly on supp(a),
    // all of them units.
    Z4Vec alpha_prime;
    for (int i = 0; i < c.k1(); ++i)
        if (coeffs->get(i)) alpha_prime += c.gen4()[i];
    if (alpha_prime.mod2() != a)
        throw std::logic_error("deaugment: no unit-entry codeword over supp(a)");

    // alpha is supported on supp(a) with unit entries and <alpha,alpha'> = 2
    // (mod 4).  The unflipped lift(a) is preferred when it qualifies: it
    // inverts a prior augmentation along a exactly.  Otherwise the sign at
    // the smallest support index is flipped.  The output depends only on
    // alpha; the coset ambiguity of alpha' moves the glue within ker phi.
    Z4Vec alpha = Z4Vec::lift(a, n);
    if (alpha.dot4(alpha_prime) != 2) alpha.negate_coord(a.lowest());
    if (alpha.dot4(alpha_prime) != 2)
        throw std::logic_error("deaugment: <alpha, alpha'> != 2 (mod 4)");

    Z4Vec diff = alpha - alpha_prime;
    if (!diff.all_even()) throw std::logic_error("deaugment: alpha - alpha' is not even");
    BitVec cvec = diff.halved();
    if (a.dot(cvec) != 1) throw std::logic_error("deaugment: <a,c> != 1");

    Z4Code out = kernel_plus_glue(c, alpha, diff);
    if (out.log2_size() != c.log2_size())
        throw std::logic_error("deaugment: output size mismatch");
    if (!out.is_extremal()) throw std::logic_error("deaugment: output is not extremal Type II");

    // residue(C') = {b in residue(C) : <b,c> = 0}
    std::vector<BitVec> sub;
    BitVec odd;
    bool have_odd = false;
    for (const BitVec& r : c.residue().basis()) {
        if (r.dot(cvec)) {
            if (!have_odd) { odd = r; have_odd = true; }
            else sub.push_back(r ^ odd);
        } else {
            sub.push_back(r);
        }
    }
    if (out.residue() != BinaryCode::from_rows(n, sub))
        throw std::logic_error("deaugment: residue identity failed");
    if (out.residue().span_with(a) != c.residue())
        throw std::logic_error("deaugment: residue span-back identity failed");
    return {out, DeaugmentationWitness{a, alpha_prime, alpha, cvec, diff}};
}

}  // namespace z4wb
