#include "yvpoly/yablonskii.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "yvpoly/errors.hpp"

namespace yvpoly {

namespace {

unsigned long expected_degree(unsigned n) {
    return static_cast<unsigned long>(n) * (n + 1) / 2;
}

}  // namespace

YVCache::YVCache() {
    entries_.emplace(0u, IntPoly::one());
    entries_.emplace(1u, IntPoly::variable());
}

const IntPoly& YVCache::generate(unsigned n) {
    auto hit = entries_.find(n);
    if (hit != entries_.end()) return hit->second;

    // Resume from the largest cached index below n whose predecessor is also
    // cached; Q_0 and Q_1 guarantee a starting point.
    unsigned k = n - 1;
    while (!(contains(k) && contains(k - 1))) --k;

    const IntPoly z = IntPoly::variable();
    for (; k < n; ++k) {
        const IntPoly& qk = entries_.at(k);
        const IntPoly& qprev = entries_.at(k - 1);
        IntPoly wronskian = qk * derivative(qk, 2) - derivative(qk) * derivative(qk);
        IntPoly rhs = z * (qk * qk) - Int(4) * wronskian;
        try {
            entries_.emplace(k + 1, exact_div(rhs, qprev));
        } catch (const NotDivisibleError& e) {
            throw RecurrenceDivisionError(
                "recurrence step " + std::to_string(k) + " -> " +
                std::to_string(k + 1) + " left a remainder: " + e.what());
        }
    }
    return entries_.at(n);
}

nlohmann::json YVCache::to_json() const {
    nlohmann::json polys = nlohmann::json::object();
    for (const auto& [n, p] : entries_)
        polys[std::to_string(n)] = p.to_decimal_strings();
    return nlohmann::json{{"version", 1}, {"polys", std::move(polys)}};
}

YVCache YVCache::from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("version", 0) != 1 || !j.contains("polys") ||
        !j["polys"].is_object())
        throw CacheError("cache: unrecognized document layout");
    YVCache cache;
    for (const auto& [key, value] : j["polys"].items()) {
        unsigned long n;
        try {
            std::size_t pos = 0;
            n = std::stoul(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw CacheError("cache: bad index key \"" + key + "\"");
        }
        if (!value.is_array())
            throw CacheError("cache: entry " + key + " is not an array");
        std::vector<std::string> strings;
        for (const auto& item : value) {
            if (!item.is_string())
                throw CacheError("cache: entry " + key + " has a non-string coefficient");
            strings.push_back(item.get<std::string>());
        }
        if (!strings.empty() && strings.back() == "0")
            throw CacheError("cache: entry " + key + " is not in canonical form");
        IntPoly p;
        try {
            p = IntPoly::from_decimal_strings(strings);
        } catch (const std::invalid_argument& e) {
            throw CacheError("cache: entry " + key + ": " + e.what());
        }
        // Cheap structural validation: reject anything that cannot be Q_n.
        unsigned un = static_cast<unsigned>(n);
        if (p.is_zero() || p.degree() < 0 ||
            static_cast<unsigned long>(p.degree()) != expected_degree(un) ||
            p.leading() != 1)
            throw CacheError("cache: entry " + key + " fails degree/monic checks");
        unsigned long r = expected_degree(un) % 3;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            if (i % 3 != r && sign(p.coeffs()[i]) != 0)
                throw CacheError("cache: entry " + key + " fails the z^3 support check");
        cache.entries_.insert_or_assign(un, std::move(p));
    }
    if (cache.entries_.at(0) != IntPoly::one() ||
        cache.entries_.at(1) != IntPoly::variable())
        throw CacheError("cache: entries 0 and 1 must be 1 and z");
    return cache;
}

void YVCache::save(const std::filesystem::path& path) const {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot open " + tmp.string());
        out << to_json().dump();
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cache: write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

YVCache YVCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cache: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CacheError("cache: parse error in " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

StructureReport verify_structure(unsigned n, YVCache& cache) {
    const IntPoly& q = cache.generate(n);
    StructureReport rep;
    rep.n = n;
    rep.degree_ok = !q.is_zero() &&
                    static_cast<unsigned long>(q.degree()) == expected_degree(n);
    rep.monic = !q.is_zero() && q.leading() == 1;

    const unsigned long r = expected_degree(n) % 3;
    rep.z3_class = (r == 1) ? StructureClass::z_times_z3 : StructureClass::in_z3;
    rep.z3_ok = true;
    for (std::size_t i = 0; i < q.coeffs().size(); ++i)
        if (i % 3 != r && sign(q.coeffs()[i]) != 0) rep.z3_ok = false;

    for (const Int& c : q.coeffs())
        if (sign(c) != 0) {
            rep.lowest_coeff = c;
            break;
        }
    rep.sign_at_zero = sign(q.coeff(0));
    return rep;
}

Int lowest_coeff_by_recursion(unsigned n) {
    Int prev(1), cur(1);  // x_0, x_1
    if (n == 0) return prev;
    for (unsigned k = 1; k < n; ++k) {
        Int factor;
        switch (k % 3) {
            case 0: factor = Int(2 * k + 1); break;
            case 1: factor = Int(4); break;
            default: factor = -Int(2 * k + 1); break;
        }
        Int num = factor * cur * cur, next, rem;
        mpz_tdiv_qr(next.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (sign(rem) != 0)
            throw RecursionDivisionError(
                "lowest-coefficient recursion inexact at step " + std::to_string(k));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

int sign_at_zero_predicted(unsigned n) {
    switch (n % 12) {
        case 3: case 5: case 6: case 8:
            return -1;
        case 1: case 4: case 7: case 10:
            return 0;
        default:  // 0, 2, 9, 11
            return 1;
    }
}

std::array<bool, 3> verify_wronskian_identities(unsigned n, YVCache& cache) {
    if (n < 1) throw std::invalid_argument("verify_wronskian_identities: n >= 1");
    cache.generate(n + 1);
    const IntPoly& lo = cache.at(n - 1);
    const IntPoly& mid = cache.at(n);
    const IntPoly& hi = cache.at(n + 1);
    const Int m(2 * n + 1);

    const IntPoly mid1 = derivative(mid);
    const IntPoly mid2 = derivative(mid, 2);

    IntPoly lhs1 = derivative(hi) * lo - hi * derivative(lo);
    IntPoly lhs2 = derivative(hi, 2) * lo - hi * derivative(lo, 2);
    IntPoly lhs3 = derivative(hi, 3) * lo - hi * derivative(lo, 3);

    IntPoly rhs1 = m * (mid * mid);
    IntPoly rhs2 = (Int(2) * m) * (mid * mid1);
    IntPoly rhs3 = (Int(2) * m) * (mid1 * mid1) + m * (mid * mid2);

    return {lhs1 == rhs1, lhs2 == rhs2, lhs3 == rhs3};
}

std::array<bool, 3> coprimality_report(unsigned n, YVCache& cache) {
    if (n < 1) throw std::invalid_argument("coprimality_report: n >= 1");
    cache.generate(n + 1);
    const IntPoly& prev = cache.at(n - 1);
    const IntPoly& cur = cache.at(n);
    const IntPoly& next = cache.at(n + 1);
    return {
        gcd_primitive(cur, derivative(cur)).degree() == 0,
        gcd_primitive(prev, cur).degree() == 0,
        gcd_primitive(prev, next).degree() == 0,
    };
}

}  // namespace yvpoly
