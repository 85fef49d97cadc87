#pragma once

// Line-oriented text format for surfaces, named classes, moment sequences and
// forms. UTF-8, '#' starts a comment, all numbers are integers.
//
//   q 2
//   chi 0
//   h2_rank 6
//   pg_positive 1
//   k 0 0 0 0 0 0
//   gram              # h2_rank rows, then 'end'
//   0 0 0 0 0 1
//   ...
//   end
//   cup               # 'i j -> vector' entries with i < j, then 'end'
//   1 2 -> 1 0 0 0 0 0
//   end
//   classes           # 'name vector' entries, then 'end'
//   e12 1 0 0 0 0 0
//   end
//   moments M e12     # moment sequence of class e12
//   a 0               # starts moment a_0; terms follow
//   1 2 3 4: 1
//   end
//   form P primal     # standalone form (side defaults to primal)
//   1 2: -3
//   : 5               # empty index set
//   end

#include "hilbrel/relations.hpp"
#include "hilbrel/surface.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hilbrel {

/// A malformed surface file; what() is "source:line: message".
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct NamedForm {
    std::string name;
    ExtForm form;
};

struct NamedMoments {
    std::string name;
    std::string class_name;
    MomentSequence sequence;
};

struct SurfaceDocument {
    SurfaceTopology surface;
    std::vector<std::pair<std::string, LatticeClass>> classes;
    std::vector<NamedMoments> moments;
    std::vector<NamedForm> forms;

    const LatticeClass* find_class(const std::string& name) const;
    const NamedMoments* find_moments(const std::string& name) const;
    const NamedForm* find_form(const std::string& name) const;
};

/// Parses the structure; surface invariants are checked separately with
/// validate(). Throws ParseError.
SurfaceDocument parse_surface(std::istream& in, const std::string& source = "<input>");
SurfaceDocument parse_surface_string(const std::string& text, const std::string& source = "<string>");
SurfaceDocument load_surface(const std::string& path);

/// Serializes a document so that parse_surface reproduces it.
std::string write_surface(const SurfaceDocument& doc);

/// Parses "i j k: coeff" lines (as printed by format_terms) into a form.
ExtForm parse_terms(const std::string& text, int q, Side side);

}  // namespace hilbrel
