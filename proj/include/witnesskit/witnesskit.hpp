#pragma once

#include "witnesskit/basis.hpp"
#include "witnesskit/criteria.hpp"
#include "witnesskit/errors.hpp"
#include "witnesskit/maps.hpp"
#include "witnesskit/matcore.hpp"
#include "witnesskit/random.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/version.hpp"
#include "witnesskit/witness.hpp"
