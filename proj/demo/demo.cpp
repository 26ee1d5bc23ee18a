// Point counts, a hypergeometric sum and a zeta numerator for the Dwork quartic pencil.
#include <iostream>

#include "bhk/bhk.hpp"

using namespace bhk;

int main() {
    const std::uint64_t q = 41;
    const std::int64_t psi = 3;

    const auto f4 = fixtures::quartic_pencils().front();
    std::cout << f4.name << "  quotient " << inv::invariants_str(inv::sl_j_quotient(f4.matrix).quotient_invariants) << "\n";

    auto field = ff::FieldCache::global().field(q, 1);
    auto spec = count::PencilSpec::pencil(f4.matrix, psi);
    std::cout << "#X(F_" << q << ") at psi = " << psi << ": " << count::count_projective(spec, *field).count << "\n";

    auto h = hyper::HypergeometricParameters::make(hyper::HypergeometricParameters::parse_list("1/4,1/2,3/4"),
                                                   hyper::HypergeometricParameters::parse_list("0,0,0"));
    auto g = ff::FieldCache::global().gauss(q, 1);
    const auto t = g->field->from_int(11);
    std::cout << "classic H(t = 11) = " << hyper::hyper_sum(hyper::Definition::Classic, *g, h, t).str() << "\n";
    std::cout << "bcm     H(t = 11) = " << hyper::hyper_sum(hyper::Definition::Bcm, *g, h, t).str() << "\n";

    auto rep = zeta::assemble(zeta::Family::F4, q, psi);
    zeta::trace_check(rep, *field);
    std::cout << "P_X(T) = " << rep.display << "\n";
    std::cout << "predicted count " << rep.predicted_count() << ", trace check " << (rep.trace_ok && *rep.trace_ok ? "ok" : "failed")
              << "\n";
    return 0;
}
