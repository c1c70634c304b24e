#pragma once

#include <stdexcept>
#include <string>

namespace kfam {

enum class Errc {
    out_of_range_vertex,
    wrong_cardinality,
    ground_set_too_large,
    not_a_member,
    bad_parameters,
    overlapping_supports,
    too_few_vertices,
    not_disjoint,
    bad_c,
    incomplete_choice,
    no_witnesses,
    parse_error,
    io_error,
    not_conditionally_intersecting,
    hypothesis_not_met,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::out_of_range_vertex: return "OutOfRangeVertex";
        case Errc::wrong_cardinality: return "WrongCardinality";
        case Errc::ground_set_too_large: return "GroundSetTooLarge";
        case Errc::not_a_member: return "NotAMember";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::overlapping_supports: return "OverlappingSupports";
        case Errc::too_few_vertices: return "TooFewVertices";
        case Errc::not_disjoint: return "NotDisjoint";
        case Errc::bad_c: return "BadC";
        case Errc::incomplete_choice: return "IncompleteChoice";
        case Errc::no_witnesses: return "NoWitnesses";
        case Errc::parse_error: return "ParseError";
        case Errc::io_error: return "IoError";
        case Errc::not_conditionally_intersecting: return "NotConditionallyIntersecting";
        case Errc::hypothesis_not_met: return "HypothesisNotMet";
    }
    return "UnknownError";
}

}  // namespace kfam
