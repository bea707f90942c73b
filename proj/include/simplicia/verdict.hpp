#pragma once

#include <string>
#include <vector>

#include "simplicia/simplex.hpp"

namespace simplicia {

enum class Status { Yes, No, Unknown };

const char* to_string(Status s);

// Three-valued answer. Yes and No always carry a certificate; Unknown never
// does, though it may carry a note explaining why the search gave up.
struct Verdict {
    Status status = Status::Unknown;
    std::string certificate;
    std::vector<Simplex> witnesses;
    std::vector<long long> values;  // numeric evidence: a vertex map, facet signs, ...
    std::string note;

    static Verdict yes(std::string certificate, std::vector<Simplex> witnesses = {},
                       std::vector<long long> values = {});
    static Verdict no(std::string certificate, std::vector<Simplex> witnesses = {},
                      std::vector<long long> values = {});
    static Verdict unknown(std::string note = {});

    bool is_yes() const { return status == Status::Yes; }
    bool is_no() const { return status == Status::No; }
    bool is_unknown() const { return status == Status::Unknown; }
};

// No beats Unknown beats Yes.
Status worst(Status a, Status b);

}  // namespace simplicia
