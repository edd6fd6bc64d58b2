#pragma once

namespace nlcl {

/// Execution backend for the data-parallel kernels. Both produce
/// bit-identical results: every output element is computed independently.
enum class Backend { serial, openmp };

}  // namespace nlcl
