#include "dunkl/fault.hpp"

#include <array>
#include <atomic>

namespace dunkl {

namespace {

std::atomic<Fault> g_fault{Fault::none};

constexpr std::array<std::pair<Fault, std::string_view>, 8> kNames{{
    {Fault::none, "none"},
    {Fault::annihilation_even_shift, "annihilation-even-shift"},
    {Fault::three_term_e_shift, "three-term-e-shift"},
    {Fault::lemma_odd_shift, "lemma-odd-shift"},
    {Fault::gamma_mu_shift, "gamma-mu-shift"},
    {Fault::closed_form_odd_sign, "closed-form-odd-sign"},
    {Fault::sphere_pochhammer_shift, "sphere-pochhammer-shift"},
    {Fault::bilinear_sign, "bilinear-sign"},
}};

} // namespace

std::string_view fault_name(Fault f) {
    for (const auto& [fault, name] : kNames)
        if (fault == f) return name;
    return "unknown";
}

std::optional<Fault> parse_fault(std::string_view name) {
    for (const auto& [fault, n] : kNames)
        if (n == name) return fault;
    return std::nullopt;
}

std::vector<Fault> all_faults() {
    std::vector<Fault> out;
    for (const auto& [fault, name] : kNames)
        if (fault != Fault::none) out.push_back(fault);
    return out;
}

Fault active_fault() { return g_fault.load(); }
bool fault_active(Fault f) { return g_fault.load() == f; }

ScopedFault::ScopedFault(Fault f) : previous_(g_fault.exchange(f)) {}
ScopedFault::~ScopedFault() { g_fault.store(previous_); }

} // namespace dunkl
