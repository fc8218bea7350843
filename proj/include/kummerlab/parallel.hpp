#pragma once

namespace kummerlab {

// Every parallel kernel also has a serial path; results are exact integers
// either way, so both paths must agree bit for bit.
enum class RunMode { serial, parallel };

}  // namespace kummerlab
