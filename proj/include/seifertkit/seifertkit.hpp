#pragma once

#include "seifertkit/abelian.hpp"
#include "seifertkit/errors.hpp"
#include "seifertkit/exactalg.hpp"
#include "seifertkit/families.hpp"
#include "seifertkit/laurent.hpp"
#include "seifertkit/pipeline.hpp"
#include "seifertkit/sequiv.hpp"
