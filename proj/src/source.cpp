#include "trispec/source.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "trispec/constructions.hpp"

namespace trispec {

namespace {

std::vector<long long> parse_args(const std::string& name, const std::string& args, std::size_t expected) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= args.size()) {
        const auto comma = args.find(',', pos);
        const auto piece = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad argument '" + piece + "' in construction " + name);
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != expected)
        throw std::invalid_argument("construction " + name + " takes " + std::to_string(expected) + " argument(s)");
    return out;
}

int narrow(long long v, const std::string& name) {
    if (v < -1'000'000 || v > 1'000'000) throw std::domain_error("argument out of range in " + name);
    return static_cast<int>(v);
}

}  // namespace

bool is_construction_name(const std::string& spec) {
    for (const char* prefix : {"kn:", "gcb:", "frob:", "phi-lb:", "intro:"})
        if (spec.rfind(prefix, 0) == 0) return true;
    return false;
}

TriangleFamily intro_family(int k) {
    switch (k) {
        case 1: return TriangleFamily{{1, 2, 3}};
        case 2: return TriangleFamily{{1, 2, 3}, {1, 2, 4}};
        case 3: return TriangleFamily{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}};
        case 4: return TriangleFamily{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}};
        default: throw std::domain_error("intro family index must be 1..4");
    }
}

TriangleFamily construct(const std::string& name) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("not a construction name: " + name);
    const auto kind = name.substr(0, colon);
    const auto args = name.substr(colon + 1);
    if (kind == "kn") {
        const int n = narrow(parse_args(name, args, 1)[0], name);
        if (n < 3) throw std::domain_error("kn:N needs N >= 3");
        return complete_family(n);
    }
    if (kind == "gcb") {
        const auto a = parse_args(name, args, 2);
        const GcbSpec spec{narrow(a[0], name), narrow(a[1], name)};
        if (spec.c < 3 || spec.b < 1) throw std::domain_error("gcb:C,B needs C >= 3 and B >= 1");
        return gcb_family(spec);
    }
    if (kind == "frob") {
        const auto a = parse_args(name, args, 2);
        const int level = narrow(a[0], name);
        if (level < 3) throw std::domain_error("frob:A,N needs A >= 3");
        return decomposition_family(frobenius_decompose(level, a[1]));
    }
    if (kind == "phi-lb") {
        const auto t = parse_args(name, args, 1)[0];
        if (t < 81) throw std::domain_error("phi-lb:T needs T >= 81");
        return phi_lower_bound_family(t).family;
    }
    if (kind == "intro") return intro_family(narrow(parse_args(name, args, 1)[0], name));
    throw std::invalid_argument("unknown construction: " + kind);
}

FamilySource load_source(const std::string& spec, std::istream& stdin_stream) {
    FamilySource src;
    src.spec = spec;
    if (is_construction_name(spec)) {
        src.family = construct(spec);
        src.text = format_family(src.family);
        return src;
    }
    std::ostringstream buffer;
    if (spec == "-") {
        buffer << stdin_stream.rdbuf();
    } else {
        std::ifstream in(spec);
        if (!in) throw std::ios_base::failure("cannot open " + spec);
        buffer << in.rdbuf();
    }
    src.text = buffer.str();
    src.family = parse_family(src.text);
    return src;
}

}  // namespace trispec
