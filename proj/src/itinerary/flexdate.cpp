#include "searoute/itinerary/flexdate.hpp"

#include <cctype>

#include "searoute/error.hpp"

namespace searoute::itinerary {

namespace {

std::optional<Qualifier> qualifier_from(char c) {
    switch (c) {
        case '=': return Qualifier::Exact;
        case '>': return Qualifier::After;
        case '<': return Qualifier::Before;
        default: return std::nullopt;
    }
}

int digits(std::string_view text, std::size_t pos, std::size_t count) {
    int value = 0;
    for (std::size_t i = pos; i < pos + count; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw MalformedDate("non-numeric date field in '" + std::string(text) + "'");
        }
        value = value * 10 + (text[i] - '0');
    }
    return value;
}

int qualifier_rank(Qualifier q) {
    switch (q) {
        case Qualifier::Before: return 0;
        case Qualifier::Exact: return 1;
        case Qualifier::After: return 2;
    }
    return 1;
}

}  // namespace

char qualifier_char(Qualifier q) {
    switch (q) {
        case Qualifier::Exact: return '=';
        case Qualifier::After: return '>';
        case Qualifier::Before: return '<';
    }
    return '=';
}

std::string FlexDate::normalized() const {
    if (!known()) return {};
    std::string out = raw.substr(0, 10);
    out[4] = '-';
    out[7] = '-';
    return out;
}

FlexDate parse_flexdate(std::string_view text) {
    FlexDate d;
    if (text.empty()) return d;
    const bool flagged = text.back() == '!';
    const std::string_view body = flagged ? text.substr(0, text.size() - 1) : text;
    if (body.size() != 10) throw MalformedDate("bad date layout: '" + std::string(text) + "'");
    const auto q1 = qualifier_from(body[4]);
    const auto q2 = qualifier_from(body[7]);
    if (!q1 || !q2) throw MalformedDate("missing qualifier in '" + std::string(text) + "'");
    if (*q1 != *q2) throw MalformedDate("mixed qualifiers in '" + std::string(text) + "'");

    d.year = digits(body, 0, 4);
    const int month = digits(body, 5, 2);
    const int day = digits(body, 8, 2);
    if (month > 12 || day > 31 || (month == 0 && day != 0)) {
        throw MalformedDate("date field out of range in '" + std::string(text) + "'");
    }
    if (month != 0) d.month = month;
    if (day != 0) d.day = day;
    d.qualifier = *q1;
    d.flagged = flagged;
    d.raw = std::string(text);
    return d;
}

std::string flexdate_to_iso(const FlexDate& d) { return d.normalized(); }

std::strong_ordering flexdate_compare(const FlexDate& a, const FlexDate& b) {
    if (!a.known() || !b.known()) throw UnknownDate("cannot compare an unknown date");
    const int c = a.normalized().compare(b.normalized());
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return qualifier_rank(a.qualifier) <=> qualifier_rank(b.qualifier);
}

}  // namespace searoute::itinerary
