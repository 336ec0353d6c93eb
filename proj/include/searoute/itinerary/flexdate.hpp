#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace searoute::itinerary {

enum class Qualifier { Exact, After, Before };

/// Uncertain date written `YYYYqMMqDD` with q one of '=', '>', '<' and an
/// optional trailing '!'. "00" in the month or day field means unknown.
/// A default-constructed FlexDate is the unknown date (empty text).
struct FlexDate {
    std::string raw;
    int year = 0;
    std::optional<int> month;
    std::optional<int> day;
    Qualifier qualifier = Qualifier::Exact;
    bool flagged = false;

    bool known() const { return !raw.empty(); }
    /// "YYYY-MM-DD" with unknown fields as "00"; empty when unknown.
    std::string normalized() const;

    friend bool operator==(const FlexDate&, const FlexDate&) = default;
};

/// Throws MalformedDate on mixed qualifiers, non-numeric or out-of-range
/// fields, or any other deviation from the layout.
FlexDate parse_flexdate(std::string_view text);

/// Original text; parse_flexdate(serialize(d)) == d.
inline const std::string& serialize(const FlexDate& d) { return d.raw; }

/// Qualifier characters replaced by '-', '!' dropped; "" when unknown.
std::string flexdate_to_iso(const FlexDate& d);

/// Chronological order on the normalized date; equal dates are ordered
/// before < exact < after. Throws UnknownDate if either side is unknown.
std::strong_ordering flexdate_compare(const FlexDate& a, const FlexDate& b);

char qualifier_char(Qualifier q);

}  // namespace searoute::itinerary
