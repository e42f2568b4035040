#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "sflab/geometry.hpp"
#include "sflab/set_family.hpp"

namespace sflab {

// .setfam text format:
//
//   setfam 1 <n> <m> <flags>      flags: "-" or "multi"
//   <size>: e1 e2 ...             m lines, strictly increasing elements < n
//
// Blank lines and '#' comments are ignored, CRLF is accepted on read and
// LF is always written.

std::string write_setfam(const SetFamily& family);
SetFamily read_setfam(std::string_view text);

// Scene formats:
//
//   scene2 1 <np>        then np lines "p x y" and any number of "d cx cy r2"
//   scene3 1 <np>        then np lines "p x y z" and any number of "h a b c w"
//
// Rationals are written as integers or num/den in lowest terms.

using Scene = std::variant<Scene2, Scene3>;

std::string write_scene(const Scene2& scene);
std::string write_scene(const Scene3& scene);
Scene read_scene(std::string_view text);

/// Parses "p", "-p" or "p/q" with q > 0.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace sflab
