#ifndef BFORGE_MATRIX_IO_HPP
#define BFORGE_MATRIX_IO_HPP

#include <json.hpp>

#include "bforge/matrix.hpp"

namespace bforge {

// {"n": int, "field": tag, "entries": [[string,...],...]}
nlohmann::json matrix_to_json(const LMat& a);
LMat matrix_from_json(const nlohmann::json& j);
LMat matrix_from_json_file(const std::string& path);

std::string matrix_str(const LMat& a);
std::string matrix_str(const RMat& a);
std::string matrix_str(const FMat& a);

}  // namespace bforge

#endif
