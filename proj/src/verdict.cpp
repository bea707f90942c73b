#include "simplicia/verdict.hpp"

#include "simplicia/error.hpp"

namespace simplicia {

const char* to_string(Status s) {
    switch (s) {
        case Status::Yes: return "Yes";
        case Status::No: return "No";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

Verdict Verdict::yes(std::string certificate, std::vector<Simplex> witnesses, std::vector<long long> values) {
    if (certificate.empty()) throw Error("a Yes verdict needs a certificate");
    return Verdict{Status::Yes, std::move(certificate), std::move(witnesses), std::move(values), {}};
}

Verdict Verdict::no(std::string certificate, std::vector<Simplex> witnesses, std::vector<long long> values) {
    if (certificate.empty()) throw Error("a No verdict needs a certificate");
    return Verdict{Status::No, std::move(certificate), std::move(witnesses), std::move(values), {}};
}

Verdict Verdict::unknown(std::string note) {
    return Verdict{Status::Unknown, {}, {}, {}, std::move(note)};
}

Status worst(Status a, Status b) {
    if (a == Status::No || b == Status::No) return Status::No;
    if (a == Status::Unknown || b == Status::Unknown) return Status::Unknown;
    return Status::Yes;
}

}  // namespace simplicia
