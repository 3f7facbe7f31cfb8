#ifndef GQD_CONFIG_HPP
#define GQD_CONFIG_HPP

// Flat key=value constants file. '#' starts a comment; blank lines ignored.
//
//   v_fermi_m_per_s = 1.0e6
//   t_hop_ev        = 2.8
//   a_lattice_nm    = 0.142

#include <charconv>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "gqd/constants.hpp"
#include "gqd/errors.hpp"

namespace gqd {

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline double parse_double(std::string_view text, const std::string &context)
{
    double v = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw DomainError(context + ": cannot parse '" + std::string(text) + "' as a number");
    return v;
}

} // namespace detail

inline PhysicalConstants parse_constants(std::istream &in, PhysicalConstants base = default_constants())
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        sv = detail::trim(sv);
        if (sv.empty())
            continue;
        const auto eq = sv.find('=');
        const std::string where = "constants line " + std::to_string(lineno);
        if (eq == std::string_view::npos)
            throw DomainError(where + ": expected key=value");
        const auto key = detail::trim(sv.substr(0, eq));
        const double value = detail::parse_double(detail::trim(sv.substr(eq + 1)), where);
        if (key == "v_fermi_m_per_s")
            base.v_fermi = value;
        else if (key == "t_hop_ev")
            base.t_hop = value;
        else if (key == "a_lattice_nm")
            base.a_lattice = value;
        else
            throw DomainError(where + ": unknown key '" + std::string(key) + "'");
    }
    base.validate();
    return base;
}

inline PhysicalConstants load_constants_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open constants file '" + path + "'");
    return parse_constants(in);
}

} // namespace gqd

#endif
