#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "dct/error.hpp"

namespace dct {

// Exact arithmetic everywhere; no floating point anywhere in the artifact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw error("to_int: " + r.str() + " is not an integer");
    return rat_num(r);
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Residue in [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Rat rat_floor(const Rat& r) { return Rat(floor_div(rat_num(r), rat_den(r))); }

// Rationals are serialized as decimal-free strings "p/q" or "n".
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto check_int = [](const std::string& t) {
        if (t.empty()) throw input_error("bad rational literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw input_error("bad rational literal: " + t);
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw input_error("bad rational literal: " + t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    check_int(p);
    check_int(q);
    Int den(q);
    if (den == 0) throw input_error("zero denominator: " + s);
    return Rat(Int(p), den);
}

// FNV-1a, used for stable input digests in reports.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ull) {
    return fnv1a(s.data(), s.size(), h);
}

} // namespace dct
