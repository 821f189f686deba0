// Binary weight container.
//
// Layout (all integers little-endian):
//   magic   "RHIW" (4 bytes)
//   u32     format version (currently 1)
//   u32     parameter count
//   per parameter:
//     u32     name length
//     bytes   name (no terminator)
//     u32     rank
//     u64[r]  shape
//     f64[n]  data, raw little-endian
//
// Round-trips are bit-exact: doubles are written verbatim.
#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "rhi/tensor.hpp"

namespace rhi {

inline constexpr char kWeightsMagic[4] = {'R', 'H', 'I', 'W'};
inline constexpr std::uint32_t kWeightsVersion = 1;

void write_weights(std::ostream& out, const std::map<std::string, Tensor>& params);
std::map<std::string, Tensor> read_weights(std::istream& in);

void write_weights_file(const std::string& path,
                        const std::map<std::string, Tensor>& params);
std::map<std::string, Tensor> read_weights_file(const std::string& path);

}  // namespace rhi
