#ifndef GQD_TOOLS_TABLE_HPP
#define GQD_TOOLS_TABLE_HPP

// Columnar output: RFC-4180-style CSV with a header row, or a JSON array of
// objects keyed by the same headers. Numbers carry 12 significant digits and
// never depend on the locale.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace gqd::cli {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

inline std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0; // drop the sign of -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

enum class Format
{
    Csv,
    Json,
};

class Table
{
public:
    explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}

    void add_row(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
    std::size_t rows() const noexcept { return rows_.size(); }
    const std::vector<std::string> &headers() const noexcept { return headers_; }

    void write(std::ostream &os, Format fmt) const { fmt == Format::Csv ? write_csv(os) : write_json(os); }

    void write_csv(std::ostream &os) const
    {
        for (std::size_t i = 0; i < headers_.size(); ++i)
            os << (i ? "," : "") << csv_escape(headers_[i]);
        os << '\n';
        for (const auto &row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_cell(row[i]);
            os << '\n';
        }
    }

    void write_json(std::ostream &os) const
    {
        os << '[';
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            os << (r ? ",\n  {" : "\n  {");
            for (std::size_t i = 0; i < rows_[r].size(); ++i)
                os << (i ? ", " : "") << json_string(headers_[i]) << ": " << json_cell(rows_[r][i]);
            os << '}';
        }
        os << (rows_.empty() ? "]\n" : "\n]\n");
    }

private:
    static std::string csv_escape(const std::string &s)
    {
        if (s.find_first_of(",\"\n\r") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + '"';
    }

    static std::string json_string(const std::string &s)
    {
        std::string out = "\"";
        for (char c : s) {
            switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
            }
        }
        return out + '"';
    }

    static std::string csv_cell(const Cell &c)
    {
        if (const auto *d = std::get_if<double>(&c))
            return format_number(*d);
        if (const auto *i = std::get_if<std::int64_t>(&c))
            return std::to_string(*i);
        if (const auto *b = std::get_if<bool>(&c))
            return *b ? "true" : "false";
        return csv_escape(std::get<std::string>(c));
    }

    static std::string json_cell(const Cell &c)
    {
        if (const auto *d = std::get_if<double>(&c))
            return std::isfinite(*d) ? format_number(*d) : json_string(format_number(*d));
        if (const auto *i = std::get_if<std::int64_t>(&c))
            return std::to_string(*i);
        if (const auto *b = std::get_if<bool>(&c))
            return *b ? "true" : "false";
        return json_string(std::get<std::string>(c));
    }

    std::vector<std::string> headers_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace gqd::cli

#endif
