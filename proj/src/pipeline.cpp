#include "holorec/pipeline.hpp"

#include "holorec/errors.hpp"

namespace holorec {

std::vector<Rat> oracle_lattice_prefix(const GFClass& cls, const PRecurrence& rec, long count) {
    if (count <= 0) return {};
    long order = rec.offset + rec.stride * (count - 1);
    TruncatedSeries s = oracle_expand(cls, static_cast<int>(order));
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long m = 0; m < count; ++m) out.push_back(s.at(static_cast<int>(rec.offset + rec.stride * m)));
    return out;
}

namespace {

PRecurrence certify_with_oracle(const GFClass& cls, PRecurrence rec, int guard) {
    long needed = certify_terms_needed(rec, guard);
    std::vector<Rat> terms = oracle_lattice_prefix(cls, rec, needed);
    return certify_against(std::move(rec), terms, guard);
}

} // namespace

Derivation derive_pipeline(const GFClass& cls, int guard) {
    validate_class(cls);
    Derivation d;
    d.cls = cls;
    if (!std::holds_alternative<Hypergeometric>(cls)) d.ode = derive_ode(cls);

    if (d.ode)
        d.rec = certify_with_oracle(cls, ode_to_recurrence(*d.ode), guard);
    else
        d.rec = certify_with_oracle(cls, closed_form_recurrence(cls), guard);
    d.closed = certify_with_oracle(cls, closed_form_recurrence(cls), guard);
    return d;
}

PRecurrence shortened_recurrence(const Derivation& d, int guard) {
    if (!d.ode) throw DerivationError("no ODE available to shorten from");
    if (d.ode->order() != 1)
        throw DerivationError("shortening starts from a first-order ODE");
    const Poly& R = d.ode->A(1);
    Rat at_one = R.eval(Rat(1));
    if (at_one != 0)
        throw DerivationError("shortening requires the coefficient sum of R to vanish "
                              "(a 1-x factor); R(1) = " + rat_str(at_one));
    PRecurrence rec2 = ode_to_recurrence(differentiate_ode(*d.ode));
    long needed = certify_terms_needed(rec2, guard);
    std::vector<Rat> terms = oracle_lattice_prefix(d.cls, rec2, needed);
    rec2 = certify_against(std::move(rec2), terms, guard);
    return shorten(d.rec, rec2, guard);
}

} // namespace holorec
