#ifndef VCSP_CERTIFICATE_HPP
#define VCSP_CERTIFICATE_HPP

#include "vcsp/classify.hpp"

#include <string>
#include <string_view>

namespace vcsp {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Serializes a verdict for `lang`: language hash, verdict, loop-free pair set, operation
/// tables, mu witnesses, budgets, trace and the tool version.
std::string certificate_json(const Verdict& v, const Language& lang);

struct CertificateCheck {
    bool valid = false;
    VerdictKind verdict = VerdictKind::Unknown;
    std::string message;
};

/// Replays a certificate against `lang` without any search:
///  tractable: STP and triple re-checked as multimorphisms with their pair-set structure;
///  soft self-loop: the stored gadget is re-evaluated and its self-loop re-tested;
///  no majority: the refutation tree is replayed.
/// A version other than kToolVersion is rejected. Malformed files throw ParseError.
CertificateCheck verify_certificate(std::string_view text, const Language& lang);

} // namespace vcsp

#endif // VCSP_CERTIFICATE_HPP
