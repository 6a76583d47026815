#ifndef LVCOX_HPP
#define LVCOX_HPP

#include "lvcox/errors.hpp"
#include "lvcox/exact.hpp"
#include "lvcox/roots.hpp"
#include "lvcox/skeleton.hpp"
#include "lvcox/cox.hpp"
#include "lvcox/iota.hpp"
#include "lvcox/iso.hpp"
#include "lvcox/factorialize.hpp"
#include "lvcox/format.hpp"
#include "lvcox/cli.hpp"

#endif // LVCOX_HPP
