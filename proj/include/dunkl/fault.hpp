#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

/// Deliberate perturbations of single constants, used as negative controls
/// for the verification suites. Never active unless explicitly requested.
enum class Fault {
    none,
    annihilation_even_shift,  // C(alpha,t,mu,k) even branch evaluated at t+1
    three_term_e_shift,       // E(t,mu,k) even branch off by one
    lemma_odd_shift,          // D_k[x^s M] odd constant off by one
    gamma_mu_shift,           // Gamma_k built with mu+1
    closed_form_odd_sign,     // odd closed form with the opposite sign
    sphere_pochhammer_shift,  // sphere moment ratio with a shifted Pochhammer base
    bilinear_sign,            // bilinear form without the (-1)^{s+t} sign
};

std::string_view fault_name(Fault f);
std::optional<Fault> parse_fault(std::string_view name);
std::vector<Fault> all_faults();

Fault active_fault();
bool fault_active(Fault f);

/// Activates a fault for the lifetime of the object (process-wide).
class ScopedFault {
public:
    explicit ScopedFault(Fault f);
    ~ScopedFault();
    ScopedFault(const ScopedFault&) = delete;
    ScopedFault& operator=(const ScopedFault&) = delete;

private:
    Fault previous_;
};

} // namespace dunkl
